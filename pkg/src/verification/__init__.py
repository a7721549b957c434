"""Verification suites, reports and their parallel execution"""
