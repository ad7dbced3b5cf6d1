"""Exact rational linear algebra helpers."""

from fractions import Fraction

from sympy import QQ, Matrix, Rational
from sympy.polys.matrices import DomainMatrix

from hodunkl.common.exceptions import InvariantViolation


def mat_vec(matrix, vector):
    """
    Multiply a matrix (nested sequences) with a vector.

    Works for any exact or floating entry type, since only + and * are used.

    Parameters
    ----------
    matrix : sequence of sequences
        Matrix with len(vector) columns.

    vector : sequence
        Vector.

    Returns
    -------
    product : tuple
        matrix @ vector.
    """
    return tuple(sum(m * v for m, v in zip(row, vector)) for row in matrix)


def invert_exact(matrix):
    """
    Invert a square rational matrix exactly.

    Parameters
    ----------
    matrix : sequence of sequences of Fraction/int
        The matrix.

    Returns
    -------
    inverse : tuple of tuples of Fraction
        The exact inverse.
    """
    inverse = Matrix(
        [[_to_rational(entry) for entry in row] for row in matrix]
    ).inv()
    return tuple(
        tuple(Fraction(int(e.p), int(e.q)) for e in inverse.row(i))
        for i in range(inverse.rows)
    )


def solve_exact(matrix, rhs):
    """
    Solve a square system exactly with sympy's DomainMatrix over QQ.

    Parameters
    ----------
    matrix : sequence of sequences of Fraction
        Square matrix.

    rhs : sequence of Fraction
        Right hand side.

    Returns
    -------
    solution : list of Fraction or None
        The unique solution, or None if the matrix is singular.
    """
    n = len(matrix)
    system = DomainMatrix(
        [[_to_qq(x) for x in row] for row in matrix], (n, n), QQ
    )
    if system.rank() < n:
        return None
    solution = system.lu_solve(
        DomainMatrix([[_to_qq(b)] for b in rhs], (n, 1), QQ)
    ).to_Matrix()
    return [
        Fraction(int(solution[i, 0].p), int(solution[i, 0].q))
        for i in range(n)
    ]


def rref_solve(matrix, rhs_columns, context=""):
    """
    Solve an overdetermined but consistent system for several right sides.

    The system matrix @ X = RHS is reduced with sympy's DomainMatrix over
    QQ. The matrix must have full column rank and the system must be
    consistent; in exact arithmetic anything else is a defect, so both are
    checked and reported as InvariantViolation.

    Parameters
    ----------
    matrix : list of lists of Fraction
        System matrix with m rows and n columns.

    rhs_columns : list of lists of Fraction
        Right hand sides, given row-wise (m rows, one column per system).

    context : str
        Description used in error messages.

    Returns
    -------
    solution : list of lists of Fraction
        n rows, one column per right hand side.
    """
    m = len(matrix)
    n = len(matrix[0]) if m > 0 else 0
    k = len(rhs_columns[0]) if m > 0 else 0
    augmented = DomainMatrix(
        [
            [_to_qq(x) for x in row] + [_to_qq(x) for x in rhs_row]
            for row, rhs_row in zip(matrix, rhs_columns)
        ],
        (m, n + k),
        QQ,
    )
    reduced, pivots = augmented.rref()
    pivots = tuple(pivots)
    if pivots[:n] != tuple(range(n)):
        raise InvariantViolation(
            "full_column_rank",
            "Rank deficient exact system " + context + ".",
            {"columns": n, "pivots": list(pivots)},
        )
    if len(pivots) > n:
        raise InvariantViolation(
            "consistent_system",
            "Inconsistent exact system " + context + ".",
            {"columns": n, "pivots": list(pivots)},
        )
    reduced = reduced.to_Matrix()
    return [
        [
            Fraction(int(reduced[i, j].p), int(reduced[i, j].q))
            for j in range(n, n + k)
        ]
        for i in range(n)
    ]


def _to_rational(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)
