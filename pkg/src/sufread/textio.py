"""Line-oriented text format and DOT rendering.

Grammar::

    # comment
    type: dfa | dsa | graph
    alphabet: TOK ...            (automata)
    states: ID ...
    initial: ID
    accepting: ID ...            (may be empty or omitted)
    edge: SRC TOK ... -> DST     (exactly one TOK for dfa)
    vertices: ID ...             (graphs)
    edge: U -- V

Tokens match ``[A-Za-z0-9_.$-]+``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import TOKEN_RE, AutomatonError, Dfa, Dsa, validate, word_key
from .hardness import Graph

Payload = Union[Dfa, Dsa, Graph]


class ParseError(AutomatonError):
    def __init__(self, line: int, col: int, message: str, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.line, self.col, self.message = line, col, message


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Payload
    source_name: str = "<input>"


_AUTOMATON_KEYS = ("alphabet", "states", "initial", "accepting")


class _Line:
    def __init__(self, number: int, raw: str):
        self.number = number
        self.raw = raw
        body = raw.split("#", 1)[0]
        self.key, _, self.rest = body.partition(":")
        self.key = self.key.strip()
        self.rest_col = raw.find(":") + 2 + (len(self.rest) - len(self.rest.lstrip()))

    def fields(self) -> list[tuple[str, int]]:
        """Whitespace-separated items with their 1-based columns."""
        out = []
        start = self.raw.find(":") + 1
        body = self.raw.split("#", 1)[0]
        i = start
        while i < len(body):
            if body[i].isspace():
                i += 1
                continue
            j = i
            while j < len(body) and not body[j].isspace():
                j += 1
            out.append((body[i:j], i + 1))
            i = j
        return out


def parse(text: str, source_name: str = "<input>") -> Document:
    def fail(line: int, col: int, msg: str):
        raise ParseError(line, col, msg, source_name)

    lines = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            fail(n, len(body) - len(body.lstrip()) + 1, "expected 'key: value'")
        lines.append(_Line(n, raw))
    if not lines:
        fail(1, 1, "empty document; expected 'type:' header")
    head = lines[0]
    if head.key != "type":
        fail(head.number, 1, "first declaration must be 'type:'")
    kind_fields = head.fields()
    if len(kind_fields) != 1 or kind_fields[0][0] not in ("dfa", "dsa", "graph"):
        fail(head.number, head.rest_col, "type must be one of dfa, dsa, graph")
    kind = kind_fields[0][0]

    decls: dict[str, tuple[_Line, list[tuple[str, int]]]] = {}
    edges: list[_Line] = []
    allowed = ("vertices",) if kind == "graph" else _AUTOMATON_KEYS
    for ln in lines[1:]:
        if ln.key == "edge":
            edges.append(ln)
            continue
        if ln.key == "type":
            fail(ln.number, 1, "duplicate declaration 'type'")
        if ln.key not in allowed:
            fail(ln.number, 1, f"unknown key {ln.key!r} for {kind}")
        if ln.key in decls:
            fail(ln.number, 1, f"duplicate declaration {ln.key!r} (first on line {decls[ln.key][0].number})")
        items = ln.fields()
        for tok, col in items:
            if not TOKEN_RE.match(tok):
                fail(ln.number, col, f"bad token {tok!r}")
        decls[ln.key] = (ln, items)

    if kind == "graph":
        return Document(kind, _parse_graph(decls, edges, fail), source_name)
    return Document(kind, _parse_automaton(kind, decls, edges, fail, head), source_name)


def _unique(items, ln, what, fail) -> list[str]:
    seen = {}
    for tok, col in items:
        if tok in seen:
            fail(ln.number, col, f"duplicate {what} {tok!r}")
        seen[tok] = col
    return [tok for tok, _ in items]


def _parse_automaton(kind, decls, edges, fail, head):
    for key in ("alphabet", "states", "initial"):
        if key not in decls:
            fail(head.number, 1, f"missing '{key}:' declaration")
    ln, items = decls["alphabet"]
    if not items:
        fail(ln.number, ln.rest_col, "alphabet must not be empty")
    alphabet = _unique(items, ln, "symbol", fail)
    ln, items = decls["states"]
    if not items:
        fail(ln.number, ln.rest_col, "at least one state is required")
    names = _unique(items, ln, "state", fail)
    idx = {nm: i for i, nm in enumerate(names)}

    def ref(tok: str, line: int, col: int) -> int:
        if tok not in idx:
            fail(line, col, f"unknown state {tok!r}")
        return idx[tok]

    ln, items = decls["initial"]
    if len(items) != 1:
        fail(ln.number, ln.rest_col, "exactly one initial state expected")
    initial = ref(items[0][0], ln.number, items[0][1])
    accepting: set[int] = set()
    if "accepting" in decls:
        ln, items = decls["accepting"]
        _unique(items, ln, "accepting state", fail)
        accepting = {ref(tok, ln.number, col) for tok, col in items}

    alpha = set(alphabet)
    transitions = []
    seen: dict[tuple, int] = {}
    for ln in edges:
        items = ln.fields()
        arrows = [i for i, (tok, _) in enumerate(items) if tok == "->"]
        if len(arrows) != 1 or arrows[0] != len(items) - 2:
            fail(ln.number, ln.rest_col, "expected 'edge: SRC LABEL... -> DST'")
        if arrows[0] < 2:
            fail(ln.number, items[arrows[0]][1], "empty label")
        (src_tok, src_col), *label_items = items[: arrows[0]]
        dst_tok, dst_col = items[-1]
        src = ref(src_tok, ln.number, src_col)
        dst = ref(dst_tok, ln.number, dst_col)
        for tok, col in label_items:
            if tok not in alpha:
                fail(ln.number, col, f"symbol {tok!r} not in alphabet")
        label = tuple(tok for tok, _ in label_items)
        if kind == "dfa" and len(label) != 1:
            fail(ln.number, label_items[1][1], "dfa edges carry exactly one symbol")
        key = (src, label)
        if key in seen:
            fail(ln.number, src_col, f"duplicate edge from {src_tok} on {' '.join(label)} "
                                     f"(first on line {seen[key]})")
        seen[key] = ln.number
        transitions.append((src, label, dst))

    if kind == "dfa":
        delta = {(s, l[0]): d for s, l, d in transitions}
        return Dfa(tuple(names), tuple(sorted(alphabet)), initial, frozenset(accepting), delta)
    return Dsa(tuple(names), tuple(sorted(alphabet)), initial, frozenset(accepting), tuple(transitions))


def _parse_graph(decls, edges, fail) -> Graph:
    if "vertices" not in decls:
        fail(1, 1, "missing 'vertices:' declaration")
    ln, items = decls["vertices"]
    vertices = _unique(items, ln, "vertex", fail)
    vs = set(vertices)
    pairs = []
    seen = {}
    for ln in edges:
        items = ln.fields()
        if len(items) != 3 or items[1][0] != "--":
            fail(ln.number, ln.rest_col, "expected 'edge: U -- V'")
        (u, ucol), _, (v, vcol) = items
        for tok, col in ((u, ucol), (v, vcol)):
            if tok not in vs:
                fail(ln.number, col, f"unknown vertex {tok!r}")
        if u == v:
            fail(ln.number, vcol, "self-loops are not allowed")
        key = frozenset((u, v))
        if key in seen:
            fail(ln.number, ucol, f"duplicate edge {u} -- {v} (first on line {seen[key]})")
        seen[key] = ln.number
        pairs.append((u, v))
    return Graph(tuple(vertices), tuple(pairs))


# -------------------------------------------------------------- serialization

def _ordered_edges(a: Dsa | Dfa) -> list[tuple[int, tuple[str, ...], int]]:
    if isinstance(a, Dfa):
        edges = [(q, (s,), t) for (q, s), t in a.delta.items()]
    else:
        edges = list(a.transitions)
    return sorted(edges, key=lambda e: (e[0], word_key(e[1]), e[2]))


def serialize_automaton(a: Dsa | Dfa) -> str:
    kind = "dfa" if isinstance(a, Dfa) else "dsa"
    lines = [f"type: {kind}",
             "alphabet: " + " ".join(a.alphabet),
             "states: " + " ".join(a.names),
             f"initial: {a.names[a.initial]}",
             ("accepting: " + " ".join(a.names[q] for q in sorted(a.accepting))).rstrip()]
    for s, label, d in _ordered_edges(a):
        lines.append(f"edge: {a.names[s]} {' '.join(label)} -> {a.names[d]}")
    return "\n".join(lines) + "\n"


serialize_dsa = serialize_automaton


def serialize_graph(g: Graph) -> str:
    lines = ["type: graph", "vertices: " + " ".join(g.vertices)]
    lines += [f"edge: {u} -- {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def serialize(doc: Document | Payload) -> str:
    payload = doc.payload if isinstance(doc, Document) else doc
    if isinstance(payload, Graph):
        return serialize_graph(payload)
    problems = validate(payload)
    if problems:
        raise AutomatonError("cannot serialize invalid automaton: " + problems[0])
    return serialize_automaton(payload)


def load(path: str) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), source_name=path)


# ------------------------------------------------------------------------ DOT

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label_text(label: tuple[str, ...], char_alphabet: bool) -> str:
    return ("" if char_alphabet else "·").join(label)


def to_dot(doc: Document | Payload) -> str:
    payload = doc.payload if isinstance(doc, Document) else doc
    if isinstance(payload, Graph):
        out = ["graph G {"]
        out += [f"  {_quote(v)};" for v in payload.vertices]
        out += [f"  {_quote(u)} -- {_quote(v)};" for u, v in payload.edges]
        return "\n".join(out + ["}"]) + "\n"
    a = payload
    char_alphabet = all(len(s) == 1 for s in a.alphabet)
    out = ["digraph A {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in a.states:
        shape = "doublecircle" if q in a.accepting else "circle"
        out.append(f"  {_quote(a.names[q])} [shape={shape}];")
    out.append(f"  __start -> {_quote(a.names[a.initial])};")
    for s, label, d in _ordered_edges(a):
        out.append(f"  {_quote(a.names[s])} -> {_quote(a.names[d])} "
                   f"[label={_quote(_label_text(label, char_alphabet))}];")
    return "\n".join(out + ["}"]) + "\n"
