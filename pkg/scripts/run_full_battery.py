#!/usr/bin/env python3
"""Run every desk-scale check and emit the machine-readable report."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from weylslice.reportcli import main

if __name__ == "__main__":
    raise SystemExit(main(["all"] + sys.argv[1:]))
