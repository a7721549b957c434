"""Operator realization of the E-series generators"""
