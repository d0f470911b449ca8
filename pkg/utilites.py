import numpy as np


def max_entry_norm(matrix):
    """
    The largest absolute entry of a matrix. Used for every residual check.
    :param matrix: numpy array
    :return: float
    """
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix)))


def unitarity_residual(matrix):
    """
    max|U^dagger U - I| for a square matrix.
    :param matrix: square numpy array
    :return: float
    """
    matrix = np.asarray(matrix)
    return max_entry_norm(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))


def read_only(array):
    """
    Returns a copy of the array which numpy refuses to modify.
    """
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


def format_complex(value):
    return f"{value.real:.12g}{value.imag:+.12g}i"


def format_matrix(matrix):
    """
    Formats a complex matrix as plain text, one row per line, entries as "re+im i".
    :param matrix: 2-D numpy array
    :return: string
    """
    rows = []
    for row in np.asarray(matrix, dtype=complex):
        rows.append(" ".join(format_complex(value) for value in row))
    return "\n".join(rows)
