"""
Koszul and Golod properties of quadratic algebras.

R = k[x_1..x_e]/I with I generated by quadrics and dim R_2 <= 3. The engine
computes Hilbert series and Betti tables up to truncation bounds, decides
Koszulness, verifies Golod witnesses Q/(f) -> R and runs the classification
pipeline.

Import directly from submodules:
- Pipeline: from src.koszul_golod.classifier.pipeline import classify
- Witnesses: from src.koszul_golod.witness.certificate import verify_witness
- Tools: from src.koszul_golod.tools import koszul_golod_classify
"""

__version__ = "1.0.0"
