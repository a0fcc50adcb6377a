"""
Entry point:

    python main.py <subcommand> --config qseries/config/examples/root_of_unity.yaml ...

Same surface as the installed ``qcli`` script.
"""

from qseries.cli.main import run

if __name__ == "__main__":
    run()
