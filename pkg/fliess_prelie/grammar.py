"""Text and JSON forms of every value the CLI reads or prints.

Sorts and their grammars:

  word      "e" or a string of 0/1, e.g. "011" = x0 x1 x1
  monomial  "1" or a product of factors X{word}, e.g. "X{01}X{e}"
  ptree     "{node node ...}" with node = d or d({block}{block}...)
  rtree     n(child,child,...) or the ladder shorthand "l:2,1"
  posword   comma separated positive integers, e.g. "3,1"

Each sort also has a linear-combination form ``<sort>_lc``: terms
``coeff*item`` (coefficient optional, e.g. "1*1 + 2*01" or "3/2*{1} - {2}")
joined by + and -. A bare "0" is the zero combination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from fliess_prelie.admissible import PosWord
from fliess_prelie.errors import FliessPrelieError, ParseError
from fliess_prelie.hopf import CoordMonomial
from fliess_prelie.lincomb import LinComb, format_scalar
from fliess_prelie.ptrees import Node, PartitionedTree, make_node
from fliess_prelie.rtrees import B, RootedTree, ladder
from fliess_prelie.words import EMPTY, BinaryWord

SORTS = ("word", "monomial", "ptree", "rtree", "posword")

GRAMMAR = r"""
start_word: word
start_monomial: monomial
start_ptree: ptree
start_rtree: rtree
start_posword: posword
start_word_lc: [SIGN] word_term (SIGN word_term)*
start_monomial_lc: [SIGN] monomial_term (SIGN monomial_term)*
start_ptree_lc: [SIGN] ptree_term (SIGN ptree_term)*
start_rtree_lc: [SIGN] rtree_term (SIGN rtree_term)*
start_posword_lc: [SIGN] posword_term (SIGN posword_term)*

word_term: [COEFF] word            -> term
monomial_term: [COEFF] monomial    -> term
ptree_term: [COEFF] ptree          -> term
rtree_term: [COEFF] rtree          -> term
posword_term: [COEFF] posword      -> term

word: "e"      -> empty_word
    | BITS     -> bits

monomial: "1"        -> unit
        | factor+    -> product
factor: "X{" word "}"

ptree: "{" node+ "}"
node: DEC ["(" block+ ")"]
block: "{" node+ "}"

rtree: DEC ["(" rtree ("," rtree)* ")"]   -> tree
     | "l:" DEC ("," DEC)*                -> ladder

posword: DEC ("," DEC)*

COEFF.2: /(0|[1-9][0-9]*)(\/[1-9][0-9]*)?\s*\*/
SIGN: "+" | "-"
BITS: /[01]+/
DEC: /[1-9][0-9]*/

%import common.WS
%ignore WS
"""

_STARTS = [f"start_{s}" for s in SORTS] + [f"start_{s}_lc" for s in SORTS]

_parser = Lark(GRAMMAR, start=_STARTS, parser="lalr")


class _ToValues(Transformer):
    def empty_word(self, _: List[Any]) -> BinaryWord:
        return EMPTY

    def bits(self, children: List[Token]) -> BinaryWord:
        return BinaryWord(str(children[0]))

    def unit(self, _: List[Any]) -> CoordMonomial:
        return CoordMonomial()

    def factor(self, children: List[BinaryWord]) -> BinaryWord:
        return children[0]

    def product(self, children: List[BinaryWord]) -> CoordMonomial:
        return CoordMonomial(tuple(children))

    def node(self, children: List[Any]) -> Node:
        dec = int(children[0])
        blocks = [b for b in children[1:] if b is not None]
        return make_node(dec, blocks)

    def block(self, children: List[Node]) -> Tuple[Node, ...]:
        return tuple(children)

    def ptree(self, children: List[Node]) -> PartitionedTree:
        return PartitionedTree(tuple(children))

    def tree(self, children: List[Any]) -> RootedTree:
        return B(int(children[0]), *[c for c in children[1:] if c is not None])

    def ladder(self, children: List[Token]) -> RootedTree:
        return ladder([int(c) for c in children])

    def posword(self, children: List[Token]) -> PosWord:
        return PosWord(tuple(int(c) for c in children))

    def term(self, children: List[Any]) -> Tuple[Fraction, Any]:
        coeff, item = children
        if coeff is None:
            return Fraction(1), item
        return Fraction(str(coeff).rstrip("*").replace(" ", "").strip()), item

    def _single(self, children: List[Any]) -> Any:
        return children[0]

    def _lincomb(self, children: List[Any]) -> LinComb:
        pairs = []
        sign = 1
        for child in children:
            if child is None:
                continue
            if isinstance(child, Token) and child.type == "SIGN":
                sign = -1 if str(child) == "-" else 1
                continue
            coeff, item = child
            pairs.append((item, sign * coeff))
            sign = 1
        return LinComb.from_terms(pairs)

    start_word = start_monomial = start_ptree = start_rtree = start_posword = _single
    start_word_lc = start_monomial_lc = start_ptree_lc = start_rtree_lc = start_posword_lc = _lincomb


def parse(sort: str, text: str) -> Any:
    """Parse ``text`` as ``sort`` (one of SORTS, optionally suffixed with _lc)."""
    base = sort[:-3] if sort.endswith("_lc") else sort
    if base not in SORTS:
        raise ParseError(f"unknown sort {sort!r}")
    if sort.endswith("_lc") and text.strip() == "0":
        return LinComb.zero()
    try:
        tree = _parser.parse(text, start=f"start_{sort}")
        return _ToValues().transform(tree)
    except UnexpectedInput as e:
        raise ParseError(f"cannot read {text!r} as {sort}", e.line, e.column) from e
    except VisitError as e:
        if isinstance(e.orig_exc, FliessPrelieError):
            raise ParseError(f"invalid {sort}: {e.orig_exc}") from e
        raise


def parse_word_lc(text: str) -> LinComb[BinaryWord]:
    return parse("word_lc", text)


# -- printing -----------------------------------------------------------------------


def format_key(key: Any) -> str:
    if isinstance(key, tuple) and not isinstance(key, (Node, RootedTree)):
        return " (x) ".join(_format_slot(k) for k in key)
    return str(key)


def _format_slot(key: Any) -> str:
    if isinstance(key, BinaryWord):
        return f"X{{{key}}}"
    return str(key)


def format_value(value: Any) -> str:
    if isinstance(value, LinComb):
        return value.format(format_key)
    return str(value)


# -- JSON -----------------------------------------------------------------------------


def _node_json(node: Node) -> Dict[str, Any]:
    return {"d": node.decoration, "blocks": [[_node_json(m) for m in b] for b in node.blocks]}


def _rtree_json(t: RootedTree) -> Dict[str, Any]:
    return {"d": t.decoration, "children": [_rtree_json(c) for c in t.children]}


def basis_json(key: Any) -> Any:
    if isinstance(key, BinaryWord):
        return str(key)
    if isinstance(key, CoordMonomial):
        return [str(w) for w in key.factors]
    if isinstance(key, PartitionedTree):
        return {"roots": [_node_json(r) for r in key.roots]}
    if isinstance(key, RootedTree):
        return _rtree_json(key)
    if isinstance(key, PosWord):
        return list(key.letters)
    if isinstance(key, tuple):
        return [basis_json(k) for k in key]
    raise TypeError(f"no JSON form for {type(key).__name__}")


def lincomb_json(x: LinComb, extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "terms": [{"coeff": format_scalar(c), "basis": basis_json(k)} for k, c in x.items()]
    }
    if extra:
        out.update(extra)
    return out


def value_json(value: Any) -> Any:
    if isinstance(value, LinComb):
        return lincomb_json(value)
    return basis_json(value)


