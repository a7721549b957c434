"""Root atlas, Weyl automorphisms and table emission"""
