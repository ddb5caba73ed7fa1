"""
Entry point for running the CLI as a module.

This allows: python -m koszul_golod classify ring.txt
"""

from .cli import cli

if __name__ == "__main__":
    cli()
