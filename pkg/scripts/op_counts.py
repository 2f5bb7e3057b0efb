"""Print the operation-count table next to the published values, plus savings."""

from zonaldct.opbench import REFERENCE_COUNTS, SAVINGS_HEADER, complexity_table, savings_report

print(f"{'method':16}{'dim':5}{'pruned':8}{'mult':>6}{'add':>6}{'shift':>6}  source       published")
for r in complexity_table():
    pub = REFERENCE_COUNTS[(r.method, r.dim, r.pruned)]
    mark = "" if (r.mult, r.add, r.shift) == pub else "  (differs)"
    print(f"{r.method:16}{r.dim:5}{str(r.pruned):8}{r.mult:6}{r.add:6}{r.shift:6}  {r.source:12} {pub}{mark}")

print()
print(SAVINGS_HEADER)
for s in savings_report():
    print(s.csv())
