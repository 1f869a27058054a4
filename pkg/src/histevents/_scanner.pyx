# cython: language_level=3, boundscheck=False
"""Compiled markup scanner: behaviourally identical to _scanner_py.

The two implementations are cross-checked by tests; keep them in sync.
"""

IMPL = "cython"

DEF MAX_TEMPLATE_DEPTH = 4


def extract_links(str text):
    """Replace [[Target|anchor]] groups by their anchor text; returns
    (plain, links, warnings) with links in order of appearance."""
    cdef list out = []
    cdef list links = []
    cdef list warnings = []
    cdef Py_ssize_t i = 0, start, j, n = len(text)
    cdef int depth
    while i < n:
        start = text.find("[[", i)
        if start < 0:
            out.append(text[i:])
            break
        out.append(text[i:start])
        depth = 1
        j = start + 2
        while j < n - 1 and depth:
            if text[j] == "[" and text[j + 1] == "[":
                depth += 1
                j += 2
            elif text[j] == "]" and text[j + 1] == "]":
                depth -= 1
                j += 2
            else:
                j += 1
        if depth:
            warnings.append(f"unbalanced '[[' at offset {start}")
            out.append(text[start:start + 2])
            i = start + 2
            continue
        inner = text[start + 2:j - 2]
        target, anchor = _split_link(inner)
        if target:
            links.append((target, anchor))
            out.append(anchor)
        else:
            warnings.append(f"empty link target at offset {start}")
        i = j
    return "".join(out), links, warnings


def _split_link(str inner):
    cdef int depth = 0
    cdef list pipes = []
    cdef Py_ssize_t k = 0, m = len(inner)
    while k < m:
        c = inner[k]
        if c == "[" and inner[k:k + 2] == "[[":
            depth += 1
            k += 2
            continue
        if c == "]" and inner[k:k + 2] == "]]":
            depth -= 1
            k += 2
            continue
        if c == "|" and depth == 0:
            pipes.append(k)
        k += 1
    if not pipes:
        target = inner.strip()
        return target, target
    target = inner[:pipes[0]].strip()
    anchor = inner[pipes[-1] + 1:].strip()
    if anchor and "[[" in anchor:
        anchor = extract_links(anchor)[0]
    return target, anchor or target


def strip_markup(str text):
    """Remove comments, ref tags, templates and quote markup; collapse
    whitespace. Returns (plain, warnings)."""
    cdef list warnings = []
    text = _drop_spans(text, "<!--", "-->")
    text = _drop_refs(text)
    text, w = _drop_templates(text)
    warnings.extend(w)
    text = text.replace("'''", "").replace("''", "")
    return " ".join(text.split()), warnings


cdef str _drop_spans(str text, str open_tok, str close_tok):
    cdef Py_ssize_t a, b
    while True:
        a = text.find(open_tok)
        if a < 0:
            return text
        b = text.find(close_tok, a + len(open_tok))
        if b < 0:
            return text[:a]
        text = text[:a] + text[b + len(close_tok):]


cdef str _drop_refs(str text):
    cdef list out = []
    cdef Py_ssize_t i = 0, a, gt, end, n = len(text)
    cdef str lower = text.lower()
    while i < n:
        a = lower.find("<ref", i)
        if a < 0:
            out.append(text[i:])
            break
        out.append(text[i:a])
        gt = text.find(">", a)
        if gt < 0:
            break
        if text[gt - 1] == "/":
            i = gt + 1
            continue
        end = lower.find("</ref>", gt)
        i = n if end < 0 else end + 6
    return "".join(out)


def _drop_templates(str text):
    cdef list out = []
    cdef list warnings = []
    cdef int depth = 0
    cdef Py_ssize_t i = 0, n = len(text)
    while i < n:
        if text[i:i + 2] == "{{":
            depth += 1
            if depth > MAX_TEMPLATE_DEPTH:
                warnings.append(f"template nesting deeper than {MAX_TEMPLATE_DEPTH}")
            i += 2
        elif text[i:i + 2] == "}}" and depth:
            depth -= 1
            i += 2
        else:
            if depth == 0:
                out.append(text[i])
            i += 1
    return "".join(out), warnings
