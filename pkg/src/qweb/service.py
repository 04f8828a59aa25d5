"""In-process HTTP service exposing the evaluator, relation suites,
link invariants, dimension queries, and kappa circle values.

All handlers are deterministic: entries and report rows are emitted in a
fixed sorted order, so identical requests yield byte-identical bodies.
Scalars are serialized as ``[exponent, re, im]`` triples (numerator and
denominator separately); matrices as ``[row, col, scalar]`` triple
lists.  Error mapping: bad input (syntax, unknown suite, mismatched
closure) gives HTTP 400, a breached dimension cap gives HTTP 413.
"""

from fractions import Fraction
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .qsym import sym_dim
from .aqhowe import weight_space
from .webir import (
    UP, DOWN, WebObject, WebSyntaxError, parse_web,
)
from .evaluator import (
    SUITES, DimensionCapError, EvalContext, eval_diagram, eval_object,
    verify_suite,
)
from .invariants import (
    KAPPA, LinkPresentation, framing_factor, invariant, kappa_circle,
    kappa_recursion_check, tangle_scalar,
)


class ContextRequest(BaseModel):
    n: int = Field(1, ge=1)
    cap: int = Field(10 ** 6, ge=1)
    screen_q0: Optional[str] = Field(
        None, description="rational screening point as NUM/DEN",
        pattern=r"^-?\d+(/\d+)?$")

    def context(self):
        q0 = Fraction(self.screen_q0) if self.screen_q0 else None
        return EvalContext(self.n, cap=self.cap, screen_q0=q0)


class EvalRequest(ContextRequest):
    body: str


class VerifyRequest(ContextRequest):
    suite: str


class InvariantRequest(ContextRequest):
    braid: str
    kinks: Optional[list[int]] = None
    normalize: bool = True


class DimsRequest(BaseModel):
    n: int = Field(1, ge=1)
    object: str = ""
    lam: Optional[list[int]] = None


class KappaRequest(BaseModel):
    kmax: int = Field(6, ge=1)


def scalar_payload(s):
    num, den = s.triples()
    return {"text": str(s), "num": num, "den": den}


def _label(x):
    if isinstance(x, tuple):
        return [_label(y) for y in x]
    return x


def map_payload(m):
    keys = sorted(m.entries, key=repr)
    return {
        "source_dim": m.source.dim,
        "target_dim": m.target.dim,
        "parity": m.par,
        "entries": [[_label(row), _label(col),
                     scalar_payload(m.entries[(row, col)])]
                    for row, col in keys],
    }


def _parse_object(text):
    word = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in ("u", "d") or \
                not tok[1:].isdigit() or int(tok[1:]) < 1:
            raise WebSyntaxError(
                "expected strand tokens like 'u1' or 'd2'", 0)
        word.append((UP if tok[0] == "u" else DOWN, int(tok[1:])))
    return WebObject(tuple(word))


app = FastAPI(title="qweb", description=__doc__)


@app.exception_handler(WebSyntaxError)
async def _syntax_error(request, exc):
    return JSONResponse(status_code=400,
                        content={"error": "parse", "detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request, exc):
    return JSONResponse(status_code=400,
                        content={"error": "parse", "detail": str(exc)})


@app.exception_handler(DimensionCapError)
async def _cap_error(request, exc):
    return JSONResponse(status_code=413,
                        content={"error": "cap", "detail": str(exc)})


@app.post("/eval")
def eval_endpoint(req: EvalRequest):
    ctx = req.context()
    m = eval_diagram(parse_web(req.body), ctx)
    out = {"n": ctx.n, "source": m.source.dim, "target": m.target.dim}
    if m.source.dim == 1 and m.target.dim == 1:
        scalar = next(iter(m.entries.values()), None)
        out["kind"] = "scalar"
        out["scalar"] = scalar_payload(scalar) if scalar is not None \
            else {"text": "0", "num": [], "den": [[0, "1", "0"]]}
    else:
        out["kind"] = "matrix"
        out["matrix"] = map_payload(m)
    return out


@app.post("/verify")
def verify_endpoint(req: VerifyRequest):
    if req.suite not in SUITES:
        raise WebSyntaxError(
            "unknown suite {!r}; choose from {}".format(
                req.suite, ", ".join(sorted(SUITES))), 0)
    ctx = req.context()
    report = verify_suite(req.suite, ctx)
    rows = []
    for r in report["results"]:
        witness = r["witness"]
        if witness is not None:
            key, lhs, rhs = witness
            witness = {"entry": _label(key),
                       "lhs": scalar_payload(lhs),
                       "rhs": scalar_payload(rhs)}
        rows.append({"name": r["name"], "params": list(r["params"]),
                     "ok": r["ok"], "witness": witness})
    return {"suite": req.suite, "n": ctx.n, "ok": report["ok"],
            "results": rows}


@app.post("/invariant")
def invariant_endpoint(req: InvariantRequest):
    ctx = req.context()
    link = LinkPresentation(req.braid,
                            kinks=tuple(req.kinks) if req.kinks else None)
    out = {"n": ctx.n, "label": link.label, "writhe": link.writhe()}
    if req.normalize:
        out["value"] = scalar_payload(invariant(link, ctx))
    else:
        out["value"] = scalar_payload(tangle_scalar(link, ctx))
        out["framing_factor"] = scalar_payload(
            framing_factor(link.label, link.writhe()))
    return out


@app.post("/dims")
def dims_endpoint(req: DimsRequest):
    obj = _parse_object(req.object)
    ctx = EvalContext(req.n, cap=10 ** 9)
    out = {
        "n": req.n,
        "object": obj.pretty(),
        "dim": eval_object(obj, ctx).dim,
        "factors": [{"orient": o, "label": k, "sym_dim": sym_dim(k, req.n)}
                    for o, k in obj.word],
        "unit_end_dim": 1,
    }
    if req.lam is not None:
        lam = tuple(req.lam)
        out["weight_space"] = {
            "lam": list(lam),
            "dim": weight_space(len(lam), req.n, lam).dim,
        }
    return out


@app.post("/kappa")
def kappa_endpoint(req: KappaRequest):
    return {
        "kappa": scalar_payload(KAPPA),
        "circles": [{"k": k, "value": scalar_payload(kappa_circle(k))}
                    for k in range(1, req.kmax + 1)],
        "recursion_ok": all(kappa_recursion_check(k)
                            for k in range(2, req.kmax + 1)),
    }
