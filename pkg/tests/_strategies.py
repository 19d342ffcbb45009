"""Shared hypothesis strategies for the property suites."""

from hypothesis import strategies as st

from rulemine.transactions import ContingencyTable, load_matrix

_cells = st.integers(min_value=0, max_value=400)

# any non-empty 2x2 table
tables = st.builds(ContingencyTable, _cells, _cells, _cells, _cells).filter(lambda ct: ct.n >= 1)


def _independent(a: int, c: int, b: int, d: int, scale: int) -> ContingencyTable:
    a = min(a, c - 1)
    b = min(b, d - 1)
    return ContingencyTable(
        a * b * scale,
        a * (d - b) * scale,
        (c - a) * b * scale,
        (c - a) * (d - b) * scale,
    )


# tables with n11*n == nx*ny exactly and non-degenerate marginals:
# marginals a/c and b/d over n = c*d*scale transactions
independent_tables = st.builds(
    _independent,
    st.integers(1, 7),
    st.integers(2, 8),
    st.integers(1, 7),
    st.integers(2, 8),
    st.integers(1, 4),
)


@st.composite
def matrix_databases(draw, max_items: int = 6, max_rows: int = 24, min_rows: int = 1):
    """Random small databases built through the matrix loader."""
    width = draw(st.integers(1, max_items))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=width, max_size=width),
            min_size=min_rows,
            max_size=max_rows,
        )
    )
    header = ",".join(f"i{j}" for j in range(width))
    body = [",".join(str(cell) for cell in row) for row in rows]
    return load_matrix("\n".join([header, *body]) + "\n")
