import os
import sys

# Test modules do `import parentpath` as a sibling module; make tests/ importable.
testdir = os.path.dirname(os.path.abspath(__file__))
if testdir not in sys.path:
    sys.path.insert(0, testdir)
