"""Mutation helpers: damaged copies of generator sequences and the probe that
shows a damaged sequence no longer certifies."""

from edgeideal.graphs import ring_of
from edgeideal.groebner import radical_membership
from edgeideal.polyalg import mono_divides
from edgeideal.sequences import GeneratorSequence


def drop_generator(seq: GeneratorSequence, i: int) -> GeneratorSequence:
    polys = seq.polys[:i] + seq.polys[i + 1:]
    return GeneratorSequence(seq.graph, seq.spec, f"{seq.case_tag} minus q{i}",
                             polys, len(polys))


def drop_term(seq: GeneratorSequence, i: int, j: int) -> GeneratorSequence:
    poly = seq.polys[i]
    terms = dict(poly.terms)
    del terms[poly.terms[j][0]]
    polys = seq.polys[:i] + (poly.ring.poly(terms),) + seq.polys[i + 1:]
    return GeneratorSequence(seq.graph, seq.spec,
                             f"{seq.case_tag} minus term {j} of q{i}",
                             polys, len(polys))


def all_mutations(seq: GeneratorSequence):
    """Yield (description, mutated sequence, monomials of the deleted material)."""
    for i, poly in enumerate(seq.polys):
        yield f"drop q{i}", drop_generator(seq, i), set(poly.monomials())
    for i, poly in enumerate(seq.polys):
        if len(poly.terms) < 2:
            continue
        for j in range(len(poly.terms)):
            yield (f"drop term {j} of q{i}", drop_term(seq, i, j),
                   {poly.terms[j][0]})


def some_edge_fails(mutated: GeneratorSequence, lost: set, modulus: int) -> bool:
    """True iff the radical certificate of some edge monomial fails.

    Edges dividing the deleted monomials are probed first: they are the
    likeliest to have dropped out of the radical.
    """
    g = mutated.graph
    ring = ring_of(g, modulus)
    gens = [ring.convert(q) for q in mutated.polys if not q.is_zero]
    edge_monos = [ring.monomial(u, v) for u, v in g.edges]
    order = sorted(range(len(edge_monos)),
                   key=lambda i: 0 if any(mono_divides(edge_monos[i], m) for m in lost) else 1)
    for i in order:
        if not radical_membership(ring.term(1, edge_monos[i]), gens):
            return True
    return False
