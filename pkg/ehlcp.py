#!/usr/bin/env python3
"""
EHLCP toolkit launcher
Usage: python ehlcp.py check --input sample_data/p_members_not_ssm_w.json
"""

import os
import sys

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from cli import main

if __name__ == "__main__":
    main()
