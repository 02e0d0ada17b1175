"""Run the whole replay and print the text certificate."""

import sys

from perrin_repdigits.pipeline import emit_report, run_pipeline

mode = sys.argv[1] if len(sys.argv) > 1 else "fidelity"
cert = run_pipeline(256, mode)
print(emit_report(cert, "text"))
