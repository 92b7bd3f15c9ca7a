"""
Integration Tests

End-to-end episodes through the benchmark harness: toy-game sanity,
reproducibility of raw result files and the ablation directions.
"""
