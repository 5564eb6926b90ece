"""Exhaustive two-class hierarchy generator for the decision-table check.

Enumerates every (member kind x visibility x overridden x accessed x
static-legality x final) configuration as real source code, 128 cases in
all. The target member is always named `x` (attribute) or `m()` (method).
When `accessed` is set, the superclass gains a public method that reaches
the target only through a private intermediary, so the access runs via the
visible chain, not directly. When the static configuration is "illegal" and
the member is overridden, the subclass member flips staticness, making the
override pairing illegal; when not overridden, the superclass member itself
is static (a legal pull). The final axis marks the superclass member final,
which also invalidates any override pairing.
"""

from __future__ import annotations

import itertools

KINDS = ("attribute", "method")
VISIBILITIES = ("public", "package", "protected", "private")
STATIC_CFGS = ("legal", "illegal")
FINAL_CFGS = ("plain", "final")

CONFIGS = list(
    itertools.product(
        KINDS, VISIBILITIES, (False, True), (False, True), STATIC_CFGS, FINAL_CFGS
    )
)

_VIS_PREFIX = {"public": "public ", "package": "", "protected": "protected ", "private": "private "}


def build_sources(kind, vis, overridden, accessed, static_cfg, final_cfg) -> tuple[str, str]:
    super_static = static_cfg == "illegal" and not overridden
    sub_static = static_cfg == "illegal" and overridden
    vis_prefix = _VIS_PREFIX[vis]
    mods = ("static " if super_static else "") + ("final " if final_cfg == "final" else "")

    super_members = []
    if kind == "attribute":
        init = " = 0" if final_cfg == "final" else ""
        super_members.append(f"    {vis_prefix}{mods}int x{init};")
        access_stmt = "x = 1;"
    else:
        super_members.append(f"    {vis_prefix}{mods}void m() {{")
        super_members.append("    }")
        access_stmt = "m();"
    if accessed:
        super_members.append("    public void touch() {")
        super_members.append("        mid();")
        super_members.append("    }")
        super_members.append("    private void mid() {")
        super_members.append(f"        {access_stmt}")
        super_members.append("    }")
    super_src = "class Super {\n" + "\n".join(super_members) + "\n}\n"

    sub_members = []
    if overridden:
        b_static = "static " if sub_static else ""
        if kind == "attribute":
            sub_members.append(f"    {vis_prefix}{b_static}int x;")
        else:
            sub_members.append(f"    {vis_prefix}{b_static}void m() {{")
            sub_members.append("    }")
    body = "\n".join(sub_members)
    sub_src = "class Sub extends Super {\n" + (body + "\n" if body else "") + "}\n"
    return super_src, sub_src


def effective_overridden(overridden: bool, static_cfg: str, final_cfg: str) -> bool:
    """An override pairing counts only when it is legal."""
    return overridden and static_cfg == "legal" and final_cfg == "plain"


def target_key(kind: str) -> str:
    return "x" if kind == "attribute" else "m()"
