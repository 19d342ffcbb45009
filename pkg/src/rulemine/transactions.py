"""Transaction corpora: loading, item interning, exact support queries.

A loaded database is immutable. Every item id owns a bitmask with one bit
per transaction, so support counting is a popcount over AND-ed masks and
stays in exact integer arithmetic throughout. Fractions only appear when
a caller divides a count by n.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import (
    EmptyItemset,
    InvalidItemToken,
    MalformedRecord,
    NonDisjointItemsets,
    SourceReadError,
    UnknownItem,
)

__all__ = [
    "ContingencyTable",
    "ItemDictionary",
    "Itemset",
    "Transaction",
    "TransactionDatabase",
    "dump_basket",
    "dump_matrix",
    "load_basket",
    "load_basket_file",
    "load_matrix",
    "load_matrix_file",
]


class ItemDictionary:
    """Bijective token to dense-id map; ids are 0..K-1 in first-seen order."""

    __slots__ = ("_token_to_id", "_id_to_token", "_frozen")

    def __init__(self) -> None:
        self._token_to_id: dict[str, int] = {}
        self._id_to_token: list[str] = []
        self._frozen = False

    def intern(self, token: str) -> int:
        """Return the id for ``token``, assigning the next dense id if new."""
        token = token.strip()
        if not token:
            raise InvalidItemToken("item token is empty after trimming")
        item_id = self._token_to_id.get(token)
        if item_id is not None:
            return item_id
        if self._frozen:
            raise RuntimeError("dictionary is frozen once its database is built")
        item_id = len(self._id_to_token)
        self._token_to_id[token] = item_id
        self._id_to_token.append(token)
        return item_id

    def id_of(self, token: str) -> int:
        """Look up an existing token without interning it."""
        try:
            return self._token_to_id[token.strip()]
        except KeyError:
            raise UnknownItem(f"unknown item token {token!r}") from None

    def resolve(self, item_id: int) -> str:
        if 0 <= item_id < len(self._id_to_token):
            return self._id_to_token[item_id]
        raise UnknownItem(f"unknown item id {item_id}")

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self._id_to_token)

    def _freeze(self) -> None:
        self._frozen = True

    def __contains__(self, token: object) -> bool:
        return isinstance(token, str) and token.strip() in self._token_to_id

    def __len__(self) -> int:
        return len(self._id_to_token)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ItemDictionary):
            return NotImplemented
        return self._id_to_token == other._id_to_token

    def __repr__(self) -> str:
        return f"ItemDictionary({len(self)} items)"


class Itemset:
    """Canonical itemset: a strictly ascending tuple of item ids.

    Construction deduplicates and sorts, so equal sets always compare and
    hash equal regardless of input order.
    """

    __slots__ = ("_items",)

    def __init__(self, items: Iterable[int] = ()) -> None:
        unique: set[int] = set()
        for item_id in items:
            if isinstance(item_id, bool) or not isinstance(item_id, int) or item_id < 0:
                raise ValueError(f"item ids must be non-negative integers, got {item_id!r}")
            unique.add(item_id)
        self._items = tuple(sorted(unique))

    @property
    def items(self) -> tuple[int, ...]:
        return self._items

    def union(self, other: "Itemset") -> "Itemset":
        return Itemset(self._items + other._items)

    def difference(self, other: "Itemset") -> "Itemset":
        drop = set(other._items)
        return Itemset(i for i in self._items if i not in drop)

    def isdisjoint(self, other: "Itemset") -> bool:
        return set(self._items).isdisjoint(other._items)

    def issubset(self, other: "Itemset") -> bool:
        return set(self._items) <= set(other._items)

    def __iter__(self) -> Iterator[int]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, item_id: object) -> bool:
        return item_id in self._items

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Itemset):
            return NotImplemented
        return self._items == other._items

    def __lt__(self, other: "Itemset") -> bool:
        return self._items < other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"Itemset({', '.join(map(str, self._items))})"


# A transaction is exactly its (deduplicated) itemset; the alias keeps the
# domain vocabulary available without a wrapper class.
Transaction = Itemset


@dataclass(frozen=True)
class ContingencyTable:
    """Joint 2x2 counts for an (X, Y) itemset pair over one database.

    n11 counts transactions containing both sides, n10 only X, n01 only Y,
    n00 neither. Marginals nx = n11+n10 and ny = n11+n01 are derived.
    """

    n11: int
    n10: int
    n01: int
    n00: int

    def __post_init__(self) -> None:
        for name in ("n11", "n10", "n01", "n00"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")

    @property
    def n(self) -> int:
        return self.n11 + self.n10 + self.n01 + self.n00

    @property
    def nx(self) -> int:
        return self.n11 + self.n10

    @property
    def ny(self) -> int:
        return self.n11 + self.n01

    @property
    def p_xy(self) -> float:
        return self.n11 / self.n

    @property
    def p_x(self) -> float:
        return self.nx / self.n

    @property
    def p_y(self) -> float:
        return self.ny / self.n

    def swapped(self) -> "ContingencyTable":
        """The same pair viewed as (Y, X)."""
        return ContingencyTable(self.n11, self.n01, self.n10, self.n00)


class TransactionDatabase:
    """Immutable transaction corpus with exact support-count queries.

    Two databases compare equal when they hold the same ordered sequence
    of transactions as token sets; the id encoding is internal.
    """

    __slots__ = ("_transactions", "_dictionary", "_item_masks", "_all_mask")

    def __init__(self, transactions: Iterable[Itemset], dictionary: ItemDictionary) -> None:
        self._transactions = tuple(transactions)
        self._dictionary = dictionary
        size = len(dictionary)
        masks = [0] * size
        for row, transaction in enumerate(self._transactions):
            bit = 1 << row
            for item_id in transaction:
                if item_id >= size:
                    raise UnknownItem(f"transaction {row} holds item id {item_id}, dictionary has {size}")
                masks[item_id] |= bit
        self._item_masks = masks
        self._all_mask = (1 << len(self._transactions)) - 1
        dictionary._freeze()

    @property
    def n(self) -> int:
        return len(self._transactions)

    @property
    def transactions(self) -> tuple[Itemset, ...]:
        return self._transactions

    @property
    def dictionary(self) -> ItemDictionary:
        return self._dictionary

    def itemset_of(self, tokens: Iterable[str]) -> Itemset:
        """Map tokens to an Itemset; unknown tokens raise UnknownItem."""
        return Itemset(self._dictionary.id_of(t) for t in tokens)

    def tokens_of(self, itemset: Itemset) -> tuple[str, ...]:
        return tuple(self._dictionary.resolve(i) for i in itemset)

    def _mask_of(self, itemset: Itemset) -> int:
        mask = self._all_mask
        for item_id in itemset:
            if item_id >= len(self._item_masks):
                raise UnknownItem(f"item id {item_id} not in database dictionary")
            mask &= self._item_masks[item_id]
        return mask

    def support_count(self, itemset: Itemset) -> int:
        """Number of transactions containing every item of ``itemset``.

        The empty itemset is contained in everything, so its count is n.
        """
        return self._mask_of(itemset).bit_count()

    def contingency_of(self, x: Itemset, y: Itemset) -> ContingencyTable:
        """Exact 2x2 joint counts for disjoint, non-empty itemsets x and y."""
        if len(x) == 0 or len(y) == 0:
            raise EmptyItemset("contingency requires non-empty itemsets on both sides")
        if not x.isdisjoint(y):
            raise NonDisjointItemsets(f"itemsets overlap: {x!r} and {y!r}")
        mask_x = self._mask_of(x)
        mask_y = self._mask_of(y)
        both = (mask_x & mask_y).bit_count()
        nx = mask_x.bit_count()
        ny = mask_y.bit_count()
        return ContingencyTable(both, nx - both, ny - both, self.n - nx - ny + both)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransactionDatabase):
            return NotImplemented
        if self.n != other.n:
            return False
        for mine, theirs in zip(self._transactions, other._transactions):
            if sorted(self.tokens_of(mine)) != sorted(other.tokens_of(theirs)):
                return False
        return True

    def __repr__(self) -> str:
        return f"TransactionDatabase(n={self.n}, items={len(self._dictionary)})"


def load_basket(text: str) -> TransactionDatabase:
    """Parse basket text: one transaction per line, comma-separated tokens.

    Blank lines and '#'-prefixed comment lines are skipped. Tokens are
    trimmed and duplicates within a line collapse; empty tokens between
    commas are dropped, but a line whose every token is empty raises
    MalformedRecord with its 1-based line number.
    """
    dictionary = ItemDictionary()
    transactions: list[Itemset] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [t.strip() for t in line.split(",")]
        tokens = [t for t in tokens if t]
        if not tokens:
            raise MalformedRecord(line_no, "every item token on the line is empty")
        transactions.append(Itemset(dictionary.intern(token) for token in tokens))
    return TransactionDatabase(transactions, dictionary)


def load_matrix(text: str) -> TransactionDatabase:
    """Parse 0/1 matrix text: a header of item tokens, then one row per transaction.

    Row r yields the transaction holding exactly the items whose cell is 1;
    all-zero rows are kept as empty transactions. Blank lines are skipped,
    every other row must match the header arity with cells in {0, 1}.
    """
    numbered = [(no, line) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not numbered:
        raise MalformedRecord(1, "matrix source has no header row")
    header_no, header = numbered[0]
    tokens = [t.strip() for t in header.split(",")]
    if any(not t for t in tokens):
        raise MalformedRecord(header_no, "header contains an empty item token")
    if len(set(tokens)) != len(tokens):
        raise MalformedRecord(header_no, "header repeats an item token")
    dictionary = ItemDictionary()
    ids = [dictionary.intern(t) for t in tokens]
    transactions: list[Itemset] = []
    for line_no, line in numbered[1:]:
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != len(ids):
            raise MalformedRecord(line_no, f"expected {len(ids)} cells, got {len(cells)}")
        present: list[int] = []
        for item_id, cell in zip(ids, cells):
            if cell == "1":
                present.append(item_id)
            elif cell != "0":
                raise MalformedRecord(line_no, f"cell must be 0 or 1, got {cell!r}")
        transactions.append(Itemset(present))
    return TransactionDatabase(transactions, dictionary)


def _read_source(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise SourceReadError(f"cannot read {path}: {exc}") from exc


def load_basket_file(path: str | Path) -> TransactionDatabase:
    return load_basket(_read_source(path))


def load_matrix_file(path: str | Path) -> TransactionDatabase:
    return load_matrix(_read_source(path))


def dump_basket(db: TransactionDatabase) -> str:
    """Serialize back to basket text, one line per transaction.

    The basket format cannot represent empty transactions; use
    dump_matrix for databases that hold them.
    """
    lines = []
    for transaction in db.transactions:
        if len(transaction) == 0:
            raise ValueError("basket format cannot represent an empty transaction")
        lines.append(",".join(db.tokens_of(transaction)))
    return "\n".join(lines) + ("\n" if lines else "")


def dump_matrix(db: TransactionDatabase) -> str:
    """Serialize to matrix text with the dictionary tokens as header."""
    header = ",".join(db.dictionary.tokens)
    lines = [header]
    for transaction in db.transactions:
        lines.append(",".join("1" if i in transaction else "0" for i in range(len(db.dictionary))))
    return "\n".join(lines) + "\n"
