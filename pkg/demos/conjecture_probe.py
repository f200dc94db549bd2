"""
Probing the joint k-partition question on small graphs
=======================================================

Can one k-partition reach the balanced k-cut bound and keep every part
under the k-part bound at the same time?  For graphs with at most 13
vertices the oracle answers this exactly.  The script runs the probe on
complete graphs and a batch of random ones, then reports which bound is
individually tight on each instance.
"""

from judicious.hunt import complete_tasks, random_tasks, run_hunt, summarize

k = 4
tasks = complete_tasks(k, range(k, 14), exact=True)
tasks += random_tasks(k, k, 12, trials=60, seed=1, exact=True, start=len(tasks))
verdicts = list(run_hunt(tasks, workers=2))

print(f"{'n':>3} {'verdict':<15} {'cut slack':>12} {'part slack':>12}  tight")
for v in verdicts[:10]:
    tight = [name for name in ("tight_cut", "tight_part") if v.get(name)]
    print(f"{v['n']:>3} {v['verdict']:<15} {v['cut_slack']:>12} {v['part_slack']:>12}  {', '.join(tight) or '-'}")

summary = summarize(verdicts)
print()
print("instances:", summary["instances"], " counterexamples:", summary["counterexample"])
print("cut bound tight on:", [verdicts[i]["n"] for i in summary["tight_cut"]][:12])
print("part bound tight on:", [verdicts[i]["n"] for i in summary["tight_part"]][:12])
print("both at once:", summary["both_tight"], " edgeless instances skipped:", len(summary["degenerate"]))
