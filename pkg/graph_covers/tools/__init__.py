"""
Tools package for graph_covers.

Each subpackage covers one feature area and can be used on its own:
- covers: verifying, searching and composing covering projections
- products: the two canonical double covers
- colorings: edge colorings, matchings, Tutte good sets and perfect codes
- factory: constructive simple covers
- stronger: evidence for the "stronger than" relation and the cover poset
"""
