"""
Entry point for running the suites as a module:
python -m conformal_states
"""

from .cli import main

if __name__ == "__main__":
    main()
