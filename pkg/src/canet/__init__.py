"""Joint two-disease image grading with cross-disease attention.

A self-contained multi-task grading library: a reverse-mode autodiff
tensor core, channel/spatial and cross-branch attention blocks, a small
convolutional backbone, Adam + cosine-annealed training, portable-pixmap
data ingestion, a synthetic correlated-two-disease generator, and the
grading metrics (per-disease accuracy/AUC/P/R/F1 and joint accuracy).
"""

__version__ = "0.1.0"
