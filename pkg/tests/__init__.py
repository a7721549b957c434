"""Unit tests for the Cartan-type superalgebra workbench"""
