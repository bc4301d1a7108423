"""This module formats results as plain-text tables.

Each ``*_table`` function has an ``*_array`` counterpart that returns the
rows as lists of strings, which is what the tests look at.
"""

import tabulate


tabulate.PRESERVE_WHITESPACE = True


def _images(f, generators):
    return ', '.join(f.target.label(f(g)) for g in generators)


def hom_array(values, generators):
    """Return one row per homomorphism: its number, the images of
    *generators* and the value.

    Args:
        values: ``(f, value)`` pairs as returned by
            :func:`~dwchern.topology.dw.hom_values`.
        generators: The elements of the source whose images are shown.
    """
    return [[str(i), _images(f, generators), str(value)]
            for i, (f, value) in enumerate(values)]


def hom_table(values, generators):
    """Return :func:`hom_array` as a formatted :class:`str`."""
    return tabulate.tabulate(hom_array(values, generators),
                             headers=['#', 'IMAGES', 'VALUE'],
                             tablefmt='plain')


def covering_array(records, generators):
    """Return one row per :class:`~dwchern.topology.dw.CoveringRecord`."""
    return [[str(i), _images(r.f, generators), str(r.lhs), str(r.rhs),
             str(r.sheets), 'yes' if r.reduced else 'no']
            for i, r in enumerate(records)]


def covering_table(records, generators):
    """Return :func:`covering_array` as a formatted :class:`str`."""
    headers = ['#', 'IMAGES', 'LHS', 'RHS', 'SHEETS', 'REDUCED']
    return tabulate.tabulate(covering_array(records, generators),
                             headers=headers, tablefmt='plain')


def homology_array(homology):
    """Return one row per cyclic summand of a
    :class:`~dwchern.cohomology.homology.HomologyGroup`.
    """
    rows = []
    for i, (d, z) in enumerate(zip(homology.divisors, homology.generators)):
        rows.append([str(i), f'Z/{d}', str(len(z.terms))])
    return rows


def homology_table(homology):
    """Return :func:`homology_array` as a formatted :class:`str`."""
    name = homology.group.name or 'G'
    title = f'H_{homology.degree}({name}) = ' + (
        ' + '.join(f'Z/{d}' for d in homology.divisors) or '0')
    if not homology.divisors:
        return title
    body = tabulate.tabulate(homology_array(homology),
                             headers=['#', 'SUMMAND', 'TERMS'],
                             tablefmt='plain')
    return f'{title}\n\n{body}'


def certificate_array(certificate):
    """Return the verdict rows of a
    :class:`~dwchern.cohomology.cmtype.CmCertificate`.
    """
    rows = [[f'(i) p = {p}', v.value, v.description]
            for p, v in certificate.condition_one.items()]
    for w in certificate.witnesses:
        h = w.spec.subgroup
        found = w.kappa is not None
        rows.append([f'(ii) |H| = {h.order}',
                     'found' if found else 'missing',
                     f'gcd {w.gcd}, kappa {list(w.coordinates)}'])
    rows.append(['verdict', certificate.verdict.value,
                 certificate.verdict.description])
    return rows


def certificate_table(certificate):
    """Return :func:`certificate_array` as a formatted :class:`str`."""
    return tabulate.tabulate(certificate_array(certificate),
                             headers=['CHECK', 'RESULT', 'DETAILS'],
                             tablefmt='plain')
