import os
import sys

import torch

# Make the oracle package importable as `oracles` from any test module.
sys.path.insert(0, os.path.dirname(__file__))

# Single-threaded math keeps every run bit-reproducible.
torch.set_num_threads(1)
