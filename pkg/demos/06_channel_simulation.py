"""Operator-channel simulation over an LCD subspace code.

A transmitted codeword loses `erasure_count` dimensions and picks up
`error_count` random directions per trial.  Both decoders run on every
trial; the harness cross-checks that they return identical verdicts.
"""
from lcdsubspace.codes import SubspaceCode, is_lcd_subspace_code
from lcdsubspace.gf import field_new
from lcdsubspace.simulator import ChannelSpec, corrupt, run_experiment
from lcdsubspace.subspaces import span

f2 = field_new(2)
code = SubspaceCode([
    span(f2, 4, [[0, 0, 1, 0], [0, 0, 0, 1]]),
    span(f2, 4, [[1, 1, 1, 0], [0, 0, 0, 1]]),
    span(f2, 4, [[1, 1, 0, 1], [0, 0, 1, 0]]),
])
assert bool(is_lcd_subspace_code(code))

word = next(iter(code))
spec = ChannelSpec(erasure_count=1, error_count=1, rng_seed=7)
print("one corrupted transmission of", word.basis.tolist())
print("  ->", corrupt(word, spec, trial_index=0).basis.tolist())
print("  (same trial again is identical:",
      corrupt(word, spec, trial_index=0).basis.tolist(), ")")

print("\nchannel sweep, 2000 trials each:")
print(f"{'erasures':>9} {'errors':>7} {'correct':>8} {'failure':>8} "
      f"{'wrong':>6} {'mean dist':>10}")
for rho, e in ((0, 0), (1, 0), (0, 1), (1, 1), (2, 1)):
    stats = run_experiment(code, ChannelSpec(rho, e, rng_seed=11), 2000)
    assert stats.agreement == stats.trials
    print(f"{rho:>9} {e:>7} {stats.correct:>8} {stats.failure:>8} "
          f"{stats.wrong:>6} {stats.mean_distance:>10.3f}")
print("decoders agreed on every trial above")
