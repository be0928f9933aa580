"""Small demo CLI to print a Q-marginal verification report as JSON.

Usage:
  python scripts/demo_qmarginal.py [network.net]

If network.net is omitted, the built-in popcount of 3 bits is used.
"""

import sys
from pathlib import Path

from analysis.verification import verify_qmarginal
from sampler_ir.builtins import make_builtin
from sampler_ir.netlist import parse_netlist


def main():
    if len(sys.argv) > 1:
        network = parse_netlist(Path(sys.argv[1]).read_text())
    else:
        network = make_builtin("popcount", 3)
    report = verify_qmarginal(network)
    print(report.to_json())


if __name__ == "__main__":
    main()
