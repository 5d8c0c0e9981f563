# -*- coding: utf-8 -*-
"""
Brute-force Koszul model of the Serre spectral sequences of U(n) and PU(n)
over their flag manifold, used as an independent oracle for the presented
cohomology.
"""
