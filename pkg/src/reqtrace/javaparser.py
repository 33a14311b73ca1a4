"""Token-level Java source scanner that extracts code facts.

Recognized subset: package declarations, top-level classes (several per
file allowed), `extends`, fields, methods and constructors, parameters,
local variable declarations (plain statements and `for` headers), line and
block comments, plus token-level attribute accesses and method
invocations inside bodies.  Imports and `throws` clauses are read and
deliberately not modeled.  Generics, annotations, interfaces, enums,
inner classes, and initializer blocks are skipped with a warning
diagnostic; nothing is dropped silently.

Detection rules inside a method body are intentionally token-level: any
`name(` occurrence that is not a keyword counts as an invocation, and an
identifier counts as an attribute access when it names a field declared in
the same class or is written `this.name`.  Recall matters more than
precision here; the facts feed a text corpus, not a call graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .facts import (
    AttributeFact,
    ClassFact,
    CodeFacts,
    CommentFact,
    MethodFact,
    PackageFact,
)

__all__ = ["ParseDiagnostic", "parse_compilation_unit", "parse_source_tree"]

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null""".split()
)

PRIMITIVE_TYPES = frozenset(
    "boolean byte char short int long float double void".split()
)

MODIFIERS = frozenset(
    """public private protected static final abstract synchronized native
    transient volatile strictfp""".split()
)


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str  # "warning" | "error"
    file: str
    line: int
    message: str


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "punct" | "literal" | "comment"
    text: str
    line: int


def _clean_comment(text: str) -> str:
    """Collapse control characters to spaces; comment text feeds XML and docs."""
    return "".join(ch if ch.isprintable() or ch == " " else " " for ch in text).strip()


def _lex(text: str, file: str, diagnostics: list[ParseDiagnostic]) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    line = 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            continue
        if ch == "/" and text.startswith("//", i):
            end = text.find("\n", i)
            end = n if end == -1 else end
            tokens.append(_Token("comment", _clean_comment(text[i + 2 : end]), line))
            i = end
            continue
        if ch == "/" and text.startswith("/*", i):
            end = text.find("*/", i + 2)
            if end == -1:
                diagnostics.append(
                    ParseDiagnostic("error", file, line, "unterminated block comment")
                )
                end = n
                body = text[i + 2 : end]
            else:
                body = text[i + 2 : end]
                end += 2
            cleaned = " ".join(
                _clean_comment(part.lstrip(" \t").lstrip("*")) for part in body.splitlines()
            ).strip()
            tokens.append(_Token("comment", cleaned, line))
            line += body.count("\n")
            i = end
            continue
        if ch in "\"'":
            quote = ch
            start_line = line
            j = i + 1
            while j < n and text[j] != quote:
                if text[j] == "\\":
                    j += 1
                elif text[j] == "\n":
                    line += 1
                j += 1
            if j >= n:
                diagnostics.append(
                    ParseDiagnostic(
                        "error", file, start_line, "unterminated string or char literal"
                    )
                )
            tokens.append(_Token("literal", text[i : j + 1], start_line))
            i = j + 1
            continue
        if ch.isalpha() or ch in "_$":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                j += 1
            tokens.append(_Token("ident", text[i:j], line))
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and (text[j].isalnum() or text[j] in "._"):
                j += 1
            tokens.append(_Token("literal", text[i:j], line))
            i = j
            continue
        tokens.append(_Token("punct", ch, line))
        i += 1
    return tokens


class _Cursor:
    """Linear token walker with balanced-brace skipping."""

    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def eof(self) -> bool:
        return self.i >= len(self.tokens)

    def peek(self, offset: int = 0) -> _Token | None:
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def take(self) -> _Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def at_punct(self, ch: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == "punct" and token.text == ch

    def skip_balanced(self, opener: str, closer: str) -> None:
        """Consume from the opener through its matching closer."""
        depth = 0
        while not self.eof():
            token = self.take()
            if token.kind == "punct":
                if token.text == opener:
                    depth += 1
                elif token.text == closer:
                    depth -= 1
                    if depth == 0:
                        return

    def skip_past_semicolon(self) -> None:
        while not self.eof():
            token = self.take()
            if token.kind == "punct" and token.text == ";":
                return


def _dotted_name(cursor: _Cursor) -> str:
    parts = []
    while True:
        token = cursor.peek()
        if token is None or token.kind != "ident":
            break
        parts.append(cursor.take().text)
        if cursor.at_punct("."):
            nxt = cursor.peek(1)
            if nxt is not None and nxt.kind == "ident":
                cursor.take()
                continue
        break
    return ".".join(parts)


def parse_compilation_unit(
    text: str, file: str = "<memory>"
) -> tuple[PackageFact, list[ParseDiagnostic]]:
    """Extract one file's package fragment; never raises on source content."""
    diagnostics: list[ParseDiagnostic] = []
    cursor = _Cursor(_lex(text, file, diagnostics))
    package_name = ""
    classes: list[ClassFact] = []
    pending: list[_Token] = []

    while not cursor.eof():
        token = cursor.peek()
        if token.kind == "comment":
            if token.text:
                pending.append(token)
            cursor.take()
            continue
        if token.kind == "ident":
            word = token.text
            if word == "package":
                cursor.take()
                package_name = _dotted_name(cursor)
                cursor.skip_past_semicolon()
                continue
            if word == "import":
                cursor.take()
                cursor.skip_past_semicolon()
                continue
            if word in MODIFIERS:
                cursor.take()
                continue
            if word == "class":
                cls, class_pending = _parse_class(cursor, file, diagnostics, pending)
                pending = class_pending
                if cls is not None:
                    classes.append(cls)
                continue
            if word in ("interface", "enum"):
                diagnostics.append(
                    ParseDiagnostic(
                        "warning", file, token.line, f"{word} declaration skipped"
                    )
                )
                _skip_type_declaration(cursor)
                pending = []
                continue
            diagnostics.append(
                ParseDiagnostic(
                    "warning",
                    file,
                    token.line,
                    f"unrecognized top-level construct near {word!r}",
                )
            )
            cursor.take()
            continue
        if token.kind == "punct" and token.text == "@":
            _skip_annotation(cursor, file, diagnostics)
            continue
        if token.kind == "punct" and token.text == ";":
            cursor.take()
            continue
        diagnostics.append(
            ParseDiagnostic(
                "warning",
                file,
                token.line,
                f"unrecognized top-level token {token.text!r}",
            )
        )
        cursor.take()

    return PackageFact(name=package_name, classes=tuple(classes)), diagnostics


def _skip_annotation(
    cursor: _Cursor, file: str, diagnostics: list[ParseDiagnostic]
) -> None:
    at = cursor.take()  # "@"
    name = _dotted_name(cursor) or "?"
    if cursor.at_punct("("):
        cursor.skip_balanced("(", ")")
    diagnostics.append(
        ParseDiagnostic("warning", file, at.line, f"annotation @{name} ignored")
    )


def _skip_type_declaration(cursor: _Cursor) -> None:
    cursor.take()  # interface/enum keyword
    while not cursor.eof() and not cursor.at_punct("{"):
        if cursor.at_punct(";"):
            cursor.take()
            return
        cursor.take()
    if cursor.at_punct("{"):
        cursor.skip_balanced("{", "}")


def _generic_suffix_end(tokens: list[_Token], start: int) -> int | None:
    """Index just past a balanced <...> of type-ish tokens, else None."""
    if start >= len(tokens) or tokens[start].kind != "punct" or tokens[start].text != "<":
        return None
    depth = 0
    j = start
    while j < len(tokens):
        token = tokens[j]
        if token.kind == "punct":
            if token.text == "<":
                depth += 1
            elif token.text == ">":
                depth -= 1
                if depth == 0:
                    return j + 1
            elif token.text in ",.?[]":
                pass
            else:
                return None
        elif token.kind != "ident":
            return None
        elif token.text in KEYWORDS and token.text not in PRIMITIVE_TYPES and token.text not in ("extends", "super"):
            return None
        j += 1
    return None


def _parse_class(
    cursor: _Cursor,
    file: str,
    diagnostics: list[ParseDiagnostic],
    pending: list[_Token],
) -> tuple[ClassFact | None, list[_Token]]:
    class_token = cursor.take()  # "class"
    name_token = cursor.peek()
    if name_token is None or name_token.kind != "ident":
        diagnostics.append(
            ParseDiagnostic(
                "error", file, class_token.line, "class keyword without a name"
            )
        )
        return None, []
    class_name = cursor.take().text
    class_comments = [
        CommentFact(text=c.text, kind="class-level") for c in pending
    ]

    generic_end = _generic_suffix_end(cursor.tokens, cursor.i)
    if generic_end is not None:
        diagnostics.append(
            ParseDiagnostic(
                "warning", file, name_token.line, "generic type parameters ignored"
            )
        )
        cursor.i = generic_end

    superclass = None
    while not cursor.eof() and not cursor.at_punct("{"):
        token = cursor.peek()
        if token.kind == "ident" and token.text == "extends":
            cursor.take()
            superclass = _dotted_name(cursor) or None
            generic_end = _generic_suffix_end(cursor.tokens, cursor.i)
            if generic_end is not None:
                diagnostics.append(
                    ParseDiagnostic(
                        "warning", file, token.line, "generic superclass arguments ignored"
                    )
                )
                cursor.i = generic_end
            continue
        if token.kind == "ident" and token.text == "implements":
            diagnostics.append(
                ParseDiagnostic(
                    "warning", file, token.line, "implements clause ignored"
                )
            )
            while not cursor.eof() and not cursor.at_punct("{"):
                cursor.take()
            break
        cursor.take()
    if not cursor.at_punct("{"):
        diagnostics.append(
            ParseDiagnostic(
                "error", file, class_token.line, f"class {class_name} has no body"
            )
        )
        return None, []
    cursor.take()  # "{"

    builder = _ClassBuilder(class_name, file, diagnostics)
    builder.superclass = superclass
    builder.comments.extend(class_comments)
    _parse_class_body(cursor, builder)
    return builder.finish(), []


@dataclass
class _PendingMethod:
    name: str
    parameters: list[tuple[str, str]]
    body: list[_Token]
    leading_comments: list[str]
    line: int


class _ClassBuilder:
    def __init__(self, name: str, file: str, diagnostics: list[ParseDiagnostic]):
        self.name = name
        self.file = file
        self.diagnostics = diagnostics
        self.superclass: str | None = None
        self.comments: list[CommentFact] = []
        self.attributes: list[AttributeFact] = []
        self.methods: list[_PendingMethod] = []

    def warn(self, line: int, message: str) -> None:
        self.diagnostics.append(
            ParseDiagnostic("warning", self.file, line, message)
        )

    def add_field(self, name: str, declared_type: str, line: int) -> None:
        if any(a.name == name for a in self.attributes):
            self.warn(line, f"duplicate field {name!r} skipped")
            return
        self.attributes.append(AttributeFact(name=name, declared_type=declared_type))

    def add_method(self, method: _PendingMethod) -> None:
        signature = (method.name, len(method.parameters))
        if any(
            (m.name, len(m.parameters)) == signature for m in self.methods
        ):
            self.warn(
                method.line,
                f"duplicate method signature {method.name!r}"
                f"/{len(method.parameters)} skipped",
            )
            return
        self.methods.append(method)

    def finish(self) -> ClassFact:
        field_names = {a.name for a in self.attributes}
        methods = tuple(
            _scan_method_body(pending, field_names) for pending in self.methods
        )
        return ClassFact(
            name=self.name,
            superclass=self.superclass,
            attributes=tuple(self.attributes),
            methods=methods,
            comments=tuple(self.comments),
        )


def _parse_class_body(cursor: _Cursor, builder: _ClassBuilder) -> None:
    pending: list[_Token] = []
    while not cursor.eof():
        token = cursor.peek()
        if token.kind == "punct" and token.text == "}":
            cursor.take()
            break
        if token.kind == "comment":
            if token.text:
                pending.append(token)
            cursor.take()
            continue
        if token.kind == "punct" and token.text == ";":
            cursor.take()
            continue
        if token.kind == "punct" and token.text == "@":
            _skip_annotation(cursor, builder.file, builder.diagnostics)
            continue
        if token.kind == "punct" and token.text == "{":
            builder.warn(token.line, "initializer block skipped")
            cursor.skip_balanced("{", "}")
            continue
        if token.kind == "ident" and token.text in MODIFIERS:
            cursor.take()
            continue
        if token.kind == "ident" and token.text in ("class", "interface", "enum"):
            builder.warn(token.line, f"nested {token.text} skipped")
            _skip_type_declaration(cursor)
            continue
        if token.kind == "ident":
            pending = _parse_member(cursor, builder, pending)
            continue
        builder.warn(token.line, f"unrecognized token {token.text!r} in class body")
        cursor.take()
    # trailing comments with no following member belong to the class
    builder.comments.extend(
        CommentFact(text=c.text, kind="class-level") for c in pending
    )


def _read_type_text(cursor: _Cursor, builder: _ClassBuilder) -> str | None:
    """Dotted type name with optional generic suffix and [] pairs."""
    token = cursor.peek()
    if token is None or token.kind != "ident":
        return None
    if token.text in KEYWORDS and token.text not in PRIMITIVE_TYPES:
        return None
    text = _dotted_name(cursor)
    generic_end = _generic_suffix_end(cursor.tokens, cursor.i)
    if generic_end is not None:
        builder.warn(token.line, "generic type arguments ignored")
        text += "".join(t.text for t in cursor.tokens[cursor.i : generic_end])
        cursor.i = generic_end
    while cursor.at_punct("["):
        nxt = cursor.peek(1)
        if nxt is not None and nxt.kind == "punct" and nxt.text == "]":
            cursor.take()
            cursor.take()
            text += "[]"
        else:
            break
    return text


def _parse_member(
    cursor: _Cursor, builder: _ClassBuilder, pending: list[_Token]
) -> list[_Token]:
    start_line = cursor.peek().line
    type_text = _read_type_text(cursor, builder)
    if type_text is None:
        builder.warn(start_line, "unrecognized member skipped")
        cursor.take()
        return pending

    if cursor.at_punct("(") and type_text == builder.name:
        _parse_callable(cursor, builder, builder.name, pending, start_line)
        return []

    name_token = cursor.peek()
    if name_token is None or name_token.kind != "ident" or name_token.text in KEYWORDS:
        builder.warn(start_line, f"unrecognized member after type {type_text!r}")
        if not cursor.eof():
            cursor.take()
        return pending
    member_name = cursor.take().text

    if cursor.at_punct("("):
        _parse_callable(cursor, builder, member_name, pending, start_line)
        return []

    # field declaration, possibly with several declarators
    while cursor.at_punct("["):
        nxt = cursor.peek(1)
        if nxt is not None and nxt.kind == "punct" and nxt.text == "]":
            cursor.take()
            cursor.take()
            type_text += "[]"
        else:
            break
    builder.add_field(member_name, type_text, start_line)
    _finish_field_declarators(cursor, builder, type_text, start_line)
    return pending


def _finish_field_declarators(
    cursor: _Cursor, builder: _ClassBuilder, type_text: str, line: int
) -> None:
    depth = 0
    while not cursor.eof():
        token = cursor.take()
        if token.kind != "punct":
            continue
        if token.text in "([{":
            depth += 1
        elif token.text in ")]}":
            depth -= 1
        elif token.text == ";" and depth == 0:
            return
        elif token.text == "," and depth == 0:
            nxt = cursor.peek()
            if nxt is not None and nxt.kind == "ident" and nxt.text not in KEYWORDS:
                builder.add_field(cursor.take().text, type_text, line)


def _parse_callable(
    cursor: _Cursor,
    builder: _ClassBuilder,
    name: str,
    pending: list[_Token],
    line: int,
) -> None:
    parameters = _parse_parameters(cursor, builder)
    while not cursor.eof() and not (cursor.at_punct("{") or cursor.at_punct(";")):
        token = cursor.peek()
        if token.kind == "ident" and token.text == "throws":
            cursor.take()
            while True:
                _dotted_name(cursor)
                if cursor.at_punct(","):
                    cursor.take()
                    continue
                break
            continue
        cursor.take()
    body: list[_Token] = []
    if cursor.at_punct("{"):
        start = cursor.i
        cursor.skip_balanced("{", "}")
        body = cursor.tokens[start + 1 : cursor.i - 1]
    elif cursor.at_punct(";"):
        cursor.take()
    builder.add_method(
        _PendingMethod(
            name=name,
            parameters=parameters,
            body=body,
            leading_comments=[c.text for c in pending],
            line=line,
        )
    )


def _parse_parameters(
    cursor: _Cursor, builder: _ClassBuilder
) -> list[tuple[str, str]]:
    parameters: list[tuple[str, str]] = []
    if not cursor.at_punct("("):
        return parameters
    open_token = cursor.take()
    while not cursor.eof() and not cursor.at_punct(")"):
        token = cursor.peek()
        if token.kind == "ident" and token.text == "final":
            cursor.take()
            continue
        type_text = _read_type_text(cursor, builder)
        if type_text is None:
            cursor.take()
            continue
        if cursor.at_punct(".") :
            # varargs: three dot tokens before the name
            dots = 0
            while cursor.at_punct("."):
                cursor.take()
                dots += 1
            if dots == 3:
                builder.warn(open_token.line, "varargs parameter treated as array")
                type_text += "[]"
        name_token = cursor.peek()
        if name_token is not None and name_token.kind == "ident" and name_token.text not in KEYWORDS:
            param_name = cursor.take().text
            if any(existing == param_name for existing, _ in parameters):
                builder.warn(name_token.line, f"duplicate parameter {param_name!r} skipped")
            else:
                parameters.append((param_name, type_text))
            while cursor.at_punct("["):
                nxt = cursor.peek(1)
                if nxt is not None and nxt.kind == "punct" and nxt.text == "]":
                    cursor.take()
                    cursor.take()
                else:
                    break
        if cursor.at_punct(","):
            cursor.take()
    if cursor.at_punct(")"):
        cursor.take()
    return parameters


def _scan_method_body(pending: _PendingMethod, field_names: set[str]) -> MethodFact:
    """Token scan for locals, accesses, invocations, and in-body comments."""
    locals_found: list[tuple[str, str]] = []
    accesses: list[str] = []
    invocations: list[str] = []
    comments = [
        CommentFact(text=text, kind="method-level")
        for text in pending.leading_comments
        if text
    ]

    tokens = pending.body
    consumed: set[int] = set()
    n = len(tokens)

    j = 0
    while j < n:
        token = tokens[j]
        if token.kind == "comment":
            if token.text:
                comments.append(CommentFact(text=token.text, kind="method-level"))
            j += 1
            continue
        if token.kind != "ident" or j in consumed:
            j += 1
            continue
        word = token.text
        if word == "this":
            if (
                j + 2 < n
                and tokens[j + 1].kind == "punct"
                and tokens[j + 1].text == "."
                and tokens[j + 2].kind == "ident"
            ):
                target = tokens[j + 2].text
                follows = tokens[j + 3] if j + 3 < n else None
                if follows is not None and follows.kind == "punct" and follows.text == "(":
                    invocations.append(target)
                else:
                    accesses.append(target)
                consumed.add(j + 2)
            j += 1
            continue
        if word in KEYWORDS and word not in PRIMITIVE_TYPES:
            j += 1
            continue
        nxt = tokens[j + 1] if j + 1 < n else None
        if nxt is not None and nxt.kind == "punct" and nxt.text == "(":
            if word not in PRIMITIVE_TYPES:
                invocations.append(word)
            j += 1
            continue
        declaration = _match_declaration(tokens, j, consumed)
        if declaration is not None:
            declared_names, end = declaration
            declared_type = declared_names[0][1]
            for local_name, _ in declared_names:
                locals_found.append((local_name, declared_type))
            j = end
            continue
        if word in field_names:
            accesses.append(word)
        j += 1
    return MethodFact(
        name=pending.name,
        parameters=tuple(pending.parameters),
        local_variables=tuple(locals_found),
        comments=tuple(comments),
        attribute_accesses=tuple(accesses),
        method_invocations=tuple(invocations),
    )


def _match_declaration(
    tokens: list[_Token], start: int, consumed: set[int]
) -> tuple[list[tuple[str, str]], int] | None:
    """Match `Type name` at `start`; returns declared (name, type) pairs and
    the index just past the first declarator name.

    Only the type chain and declarator names are consumed; initializer
    expressions remain visible to the main scan so the calls and field
    reads inside them are still recorded.
    """
    j = start
    n = len(tokens)
    token = tokens[j]
    if token.kind != "ident":
        return None
    if token.text in KEYWORDS and token.text not in PRIMITIVE_TYPES:
        return None
    type_parts = [token.text]
    j += 1
    while (
        j + 1 < n
        and tokens[j].kind == "punct"
        and tokens[j].text == "."
        and tokens[j + 1].kind == "ident"
        and tokens[j + 1].text not in KEYWORDS
    ):
        type_parts.append(tokens[j + 1].text)
        j += 2
    array_suffix = ""
    while (
        j + 1 < n
        and tokens[j].kind == "punct"
        and tokens[j].text == "["
        and tokens[j + 1].kind == "punct"
        and tokens[j + 1].text == "]"
    ):
        array_suffix += "[]"
        j += 2
    if j >= n or tokens[j].kind != "ident" or tokens[j].text in KEYWORDS:
        return None
    name_index = j
    name = tokens[j].text
    j += 1
    while (
        j + 1 < n
        and tokens[j].kind == "punct"
        and tokens[j].text == "["
        and tokens[j + 1].kind == "punct"
        and tokens[j + 1].text == "]"
    ):
        array_suffix += "[]"
        j += 2
    follows = tokens[j] if j < n else None
    if follows is None or follows.kind != "punct" or follows.text not in "=;,:)":
        return None
    declared_type = ".".join(type_parts) + array_suffix
    declared = [(name, declared_type)]
    consumed.update(range(start, name_index + 1))

    # extra declarators in the same statement: scan ahead at bracket depth 0
    k = j
    depth = 0
    while k < n:
        token = tokens[k]
        if token.kind == "punct":
            if token.text in "([{":
                depth += 1
            elif token.text in ")]}":
                if depth == 0:
                    break
                depth -= 1
            elif token.text == ";" and depth == 0:
                break
            elif token.text == "," and depth == 0:
                nxt = tokens[k + 1] if k + 1 < n else None
                after = tokens[k + 2] if k + 2 < n else None
                if (
                    nxt is not None
                    and nxt.kind == "ident"
                    and nxt.text not in KEYWORDS
                    and after is not None
                    and after.kind == "punct"
                    and after.text in "=,;"
                ):
                    declared.append((nxt.text, declared_type))
                    consumed.add(k + 1)
        k += 1
    return declared, j


def parse_source_tree(root: str | Path) -> tuple[CodeFacts, list[ParseDiagnostic]]:
    """Parse every .java file under `root`, merged in sorted-path order."""
    root = Path(root)
    if not root.exists():
        raise OSError(f"source root does not exist: {root}")
    if not root.is_dir():
        raise OSError(f"source root is not a directory: {root}")
    diagnostics: list[ParseDiagnostic] = []
    package_order: list[str] = []
    package_classes: dict[str, list[ClassFact]] = {}
    for path in sorted(root.rglob("*.java")):
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            diagnostics.append(
                ParseDiagnostic("error", str(path), 1, f"unreadable file: {exc}")
            )
            continue
        fragment, file_diagnostics = parse_compilation_unit(text, str(path))
        diagnostics.extend(file_diagnostics)
        if fragment.name not in package_classes:
            package_order.append(fragment.name)
            package_classes[fragment.name] = []
        existing = {cls.name for cls in package_classes[fragment.name]}
        for cls in fragment.classes:
            if cls.name in existing:
                diagnostics.append(
                    ParseDiagnostic(
                        "warning",
                        str(path),
                        1,
                        f"duplicate class {cls.name!r} in package"
                        f" {fragment.name!r} skipped",
                    )
                )
                continue
            existing.add(cls.name)
            package_classes[fragment.name].append(cls)
    packages = tuple(
        PackageFact(name=name, classes=tuple(package_classes[name]))
        for name in package_order
    )
    facts = CodeFacts(packages=packages, provenance=str(root))
    return facts, diagnostics
