"""
Compliance Tests

Property suites and brute-force oracles that pin down the NEAT machinery,
network activation, budget accounting and reward arithmetic.
"""
