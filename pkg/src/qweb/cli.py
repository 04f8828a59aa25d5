"""Command-line front end.

A thin client: every verb sends one request to the in-process HTTP
service and renders the response.  Output defaults to human-readable
text; ``--format structured`` emits the raw JSON report (scalars as
``[exponent, re, im]`` triples, matrices as triple lists), serialized
with sorted keys so identical inputs give byte-identical output.

Exit codes: 0 success, 2 parse/input error, 3 verification failure,
4 resource cap exceeded, 1 anything unexpected.
"""

import asyncio
import json
import sys

import click
import httpx

from .service import app

EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_CAP = 4


def _post(path, payload):
    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://qweb") as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _request(path, payload):
    resp = _post(path, payload)
    if resp.status_code == 413:
        click.echo("resource cap exceeded: {}".format(
            resp.json().get("detail", "")), err=True)
        raise SystemExit(EXIT_CAP)
    if resp.status_code in (400, 422):
        body = resp.json()
        detail = body.get("detail", body)
        click.echo("input error: {}".format(detail), err=True)
        raise SystemExit(EXIT_PARSE)
    if resp.status_code != 200:
        click.echo("unexpected service error: {}".format(resp.text),
                   err=True)
        raise SystemExit(1)
    return resp.json()


def _emit_structured(data):
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _body_or_stdin(body):
    if body is None or body == "-":
        return sys.stdin.read()
    return body


def _fmt_label(label):
    return json.dumps(label, separators=(",", ":"))


def _int_list(text):
    return [int(x) for x in text.split(",")] if text else None


def _common(f):
    for opt in (
        click.option("--format", "fmt",
                     type=click.Choice(["text", "structured"]),
                     default="text", show_default=True,
                     help="Output style."),
        click.option("--screen-q0", default=None, metavar="NUM/DEN",
                     help="Also screen identities at this rational q."),
        click.option("--cap", default=10 ** 6, show_default=True,
                     help="Abort if an intermediate space exceeds this "
                          "dimension."),
        click.option("--n", default=1, show_default=True,
                     help="Rank of the underlying supermodule."),
    ):
        f = opt(f)
    return f


@click.group()
def main():
    """Evaluate web diagrams, verify relation suites, and compute
    link invariants, dimensions, and kappa circle values."""


@main.command("eval")
@_common
@click.argument("body", required=False)
def eval_cmd(n, cap, screen_q0, fmt, body):
    """Evaluate a diagram in the web DSL (argument or stdin)."""
    data = _request("/eval", {
        "body": _body_or_stdin(body), "n": n, "cap": cap,
        "screen_q0": screen_q0})
    if fmt == "structured":
        _emit_structured(data)
        return
    if data["kind"] == "scalar":
        click.echo(data["scalar"]["text"])
        return
    m = data["matrix"]
    click.echo("matrix {}x{} parity {}".format(
        m["target_dim"], m["source_dim"], m["parity"]))
    for row, col, scalar in m["entries"]:
        click.echo("{} -> {}: {}".format(
            _fmt_label(col), _fmt_label(row), scalar["text"]))


@main.command("verify")
@_common
@click.option("--suite", required=True,
              help="Catalog subset: hecke, oriented, twists, or upward.")
def verify_cmd(n, cap, screen_q0, fmt, suite):
    """Verify a named suite of diagrammatic identities."""
    data = _request("/verify", {
        "suite": suite, "n": n, "cap": cap, "screen_q0": screen_q0})
    if fmt == "structured":
        _emit_structured(data)
    else:
        for r in data["results"]:
            tag = "ok  " if r["ok"] else "FAIL"
            line = "{} {}{}".format(tag, r["name"], tuple(r["params"]))
            if r["witness"]:
                w = r["witness"]
                line += "  entry {}: {} != {}".format(
                    _fmt_label(w["entry"]), w["lhs"]["text"],
                    w["rhs"]["text"])
            click.echo(line)
        click.echo("suite {} at n={}: {}".format(
            suite, data["n"], "PASS" if data["ok"] else "FAIL"))
    if not data["ok"]:
        raise SystemExit(EXIT_VERIFY)


@main.command("invariant")
@_common
@click.option("--braid", default=None,
              help="Braid DSL, e.g. 'braid 2 [1,1] : s1 s1 s1' "
                   "(stdin if omitted).")
@click.option("--kinks", default=None, metavar="K1,K2,...",
              help="Framing kinks per strand.")
@click.option("--raw", is_flag=True,
              help="Print the unnormalized closure scalar instead.")
def invariant_cmd(n, cap, screen_q0, fmt, braid, kinks, raw):
    """Compute the normalized invariant of a braid closure."""
    data = _request("/invariant", {
        "braid": _body_or_stdin(braid), "kinks": _int_list(kinks),
        "normalize": not raw, "n": n, "cap": cap,
        "screen_q0": screen_q0})
    if fmt == "structured":
        _emit_structured(data)
    else:
        click.echo(data["value"]["text"])


@main.command("dims")
@click.option("--n", default=1, show_default=True,
              help="Rank of the underlying supermodule.")
@click.option("--format", "fmt",
              type=click.Choice(["text", "structured"]),
              default="text", show_default=True)
@click.option("--lam", default=None, metavar="L1,L2,...",
              help="Also report this weight-space dimension.")
@click.argument("object", required=False)
def dims_cmd(n, fmt, lam, object):
    """Report dimensions for an object like 'u1 d2' (stdin if omitted)."""
    data = _request("/dims", {
        "object": _body_or_stdin(object).strip(), "n": n,
        "lam": _int_list(lam)})
    if fmt == "structured":
        _emit_structured(data)
        return
    click.echo("object {}: dim {}".format(
        data["object"] or "1", data["dim"]))
    for f in data["factors"]:
        click.echo("  {}{}: sym dim {}".format(
            f["orient"], f["label"], f["sym_dim"]))
    if "weight_space" in data:
        w = data["weight_space"]
        click.echo("weight space {}: dim {}".format(
            tuple(w["lam"]), w["dim"]))
    click.echo("End(unit): dim {}".format(data["unit_end_dim"]))


@main.command("kappa")
@click.option("--kmax", default=6, show_default=True,
              help="Largest circle label to report.")
@click.option("--format", "fmt",
              type=click.Choice(["text", "structured"]),
              default="text", show_default=True)
def kappa_cmd(kmax, fmt):
    """Print kappa-mode circle values and check the recursion."""
    data = _request("/kappa", {"kmax": kmax})
    if fmt == "structured":
        _emit_structured(data)
        return
    click.echo("kappa = {}".format(data["kappa"]["text"]))
    for c in data["circles"]:
        click.echo("circle({}) = {}".format(c["k"], c["value"]["text"]))
    click.echo("recursion {}".format(
        "ok" if data["recursion_ok"] else "FAIL"))
    if not data["recursion_ok"]:
        raise SystemExit(EXIT_VERIFY)


if __name__ == "__main__":
    main()
