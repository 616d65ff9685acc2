"""Random F-free dense construction: parameters, sampling, trace covers, estimators."""
