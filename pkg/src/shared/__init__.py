"""Exact linear algebra, Grassmann operators and Cartan data shared by every module"""
