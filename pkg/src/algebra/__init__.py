"""W(n), S(n), sl(1|n) realizations and the presentation engine"""
