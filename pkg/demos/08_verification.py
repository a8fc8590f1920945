"""
Running the verification suites
===============================

"""

import json

from chainmail.verify import SUITES

for name in ("prop13", "prop15", "eq21", "sec4-string", "descriptions", "kernel"):
    print(name, SUITES[name]().summary)

report = SUITES["thm32"](max_n=5)
print("thm32", report.summary)
print(json.dumps(report.as_dict()["cases"][0]["computed"]["source_homology"]))
