#!/usr/bin/env python3
"""
Entry point for snake-calculus.
"""

import sys

from snake_calculus.cli import main

if __name__ == '__main__':
    sys.exit(main())
