#!/usr/bin/env python3
"""Print the full sheet catalog with lengths, ranks and verdicts."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from weylslice.reportcli import main

if __name__ == "__main__":
    raise SystemExit(main(["catalog"] + sys.argv[1:]))
