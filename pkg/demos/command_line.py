"""
The command-line interface
==========================

Problems go in as JSON and verdicts come out as JSON; the exit status says
which verdict it was.
"""

import io
import json

from linesplit.cli import run


def shell(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), io.StringIO(stdin), out, err)
    print(f"$ linesplit {' '.join(argv)}  -> exit {code}")
    print((out.getvalue() or err.getvalue()).rstrip())


shell("decide", stdin=json.dumps({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [[2]], "r": 1}))
shell("decide", stdin=json.dumps({"base": "cpm", "m": 2, "xi": [3, 3], "lines": [[0]], "r": 1}))
shell("decide", stdin=json.dumps({"base": "cpm", "m": 2, "xi": [3, 3], "lines": [["two"]]}))
shell("schwarz", "1", "1", "0")
shell("tables", "pi", "--m", "8")
shell("enumerate", "--m", "2", "--r", "1", "--bound", "1")
