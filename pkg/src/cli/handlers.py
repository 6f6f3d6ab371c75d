"""
Batch request handlers

Each batch record names a request; handlers are looked up by that name in a
registry and return a HandlerResult, mirroring how the command line renders
the same computation.
"""

import asyncio
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator

from src.arithmetic import CoherentTriple, make_triple
from src.core.exceptions import CircularDominance, SerreWeightsError
from src.genes import dominant_letters, gene_of_triple, gene_text, is_degenerate, is_viable
from src.kisin import decompose, presentation_of_gene, render_presentation
from src.serre import common_weights_fast, render_serre_weight
from src.weights import count_weights, gene_weights


logger = logging.getLogger(__name__)

# JSON consumers lose precision above 2^53
_JSON_SAFE = 2 ** 53

Number = Union[int, str, List[int]]


def json_int(n: int) -> Union[int, str]:
    return n if abs(n) < _JSON_SAFE else str(n)


def parse_number(value: Number) -> Union[int, List[int]]:
    """Decimal integer (int or string) or a big-endian digit list."""
    if isinstance(value, int):
        return value
    if isinstance(value, list):
        return [int(d) for d in value]
    text = value.strip().strip("[]")
    if "," in text:
        return [int(d) for d in text.split(",") if d.strip()]
    return int(text)


class BatchRecord(BaseModel):
    """One line of a batch file."""
    p: int = Field(..., description="Odd prime")
    f: int = Field(..., ge=2, description="Residue degree")
    h: Number = Field(..., description="Exponent of the representation, mod q^2-1")
    gamma: Number = Field(..., description="First exponent of the type, mod q-1")
    gamma_prime: Number = Field(..., description="Second exponent of the type, mod q-1")
    request: str = Field(..., description="One of gene, count, weights, common, kisin")

    @field_validator("request")
    @classmethod
    def known_request(cls, v: str) -> str:
        if v not in ("gene", "count", "weights", "common", "kisin"):
            raise ValueError(f"unknown request {v!r}")
        return v

    def triple(self) -> CoherentTriple:
        return make_triple(
            self.p,
            self.f,
            parse_number(self.h),
            parse_number(self.gamma),
            parse_number(self.gamma_prime),
        )


class HandlerResult(BaseModel):
    """
    Result of one handler call.

    Contains the output data, success status, and optional error information.
    """
    success: bool = Field(..., description="Whether execution succeeded")
    data: Optional[Dict[str, Any]] = Field(default=None, description="Result data")
    error: Optional[str] = Field(default=None, description="Error message if failed")
    metadata: Dict[str, Any] = Field(default_factory=dict, description="Additional metadata")


class RequestHandler(ABC):
    """A named batch request computed from a coherent triple."""

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def compute(self, t: CoherentTriple) -> Dict[str, Any]:
        """Synchronous computation; runs in a worker thread."""

    async def execute(self, record: BatchRecord) -> HandlerResult:
        try:
            t = record.triple()
            data = await asyncio.to_thread(self.compute, t)
            return HandlerResult(success=True, data=data, metadata={"request": self.name})
        except SerreWeightsError as e:
            logger.debug("Handler %s failed: %s", self.name, e.message)
            return HandlerResult(success=False, error=e.message, metadata={"request": self.name, **e.details})
        except ValueError as e:
            return HandlerResult(success=False, error=f"malformed number: {e}", metadata={"request": self.name})

    def __repr__(self) -> str:
        return f"<RequestHandler: {self.name}>"


# gene: both rows, plus viability and degeneracy
class GeneHandler(RequestHandler):
    @property
    def name(self) -> str:
        return "gene"

    @property
    def description(self) -> str:
        return "Gene of the triple"

    def compute(self, t: CoherentTriple) -> Dict[str, Any]:
        return gene_payload(gene_of_triple(t))


class CountHandler(RequestHandler):
    @property
    def name(self) -> str:
        return "count"

    @property
    def description(self) -> str:
        return "Number of combinatorial weights of the gene"

    def compute(self, t: CoherentTriple) -> Dict[str, Any]:
        return {"count": json_int(count_weights(gene_of_triple(t)))}


class WeightsHandler(RequestHandler):
    @property
    def name(self) -> str:
        return "weights"

    @property
    def description(self) -> str:
        return "Combinatorial weights of the gene"

    def compute(self, t: CoherentTriple) -> Dict[str, Any]:
        return {"weights": [list(w) for w in gene_weights(gene_of_triple(t))]}


class CommonHandler(RequestHandler):
    @property
    def name(self) -> str:
        return "common"

    @property
    def description(self) -> str:
        return "Common Serre weights of the representation and the type"

    def compute(self, t: CoherentTriple) -> Dict[str, Any]:
        weights = common_weights_fast(t)
        return {
            "common": [
                {"s": json_int(w.s.value), "r": list(w.r), "text": render_serre_weight(w)}
                for w in weights
            ]
        }


class KisinHandler(RequestHandler):
    @property
    def name(self) -> str:
        return "kisin"

    @property
    def description(self) -> str:
        return "Kisin presentation and component slices of the gene"

    def compute(self, t: CoherentTriple) -> Dict[str, Any]:
        g = gene_of_triple(t)
        return {
            "presentation": render_presentation(presentation_of_gene(g)).splitlines(),
            "components": [list(c.columns) for c in decompose(g)],
        }


def gene_payload(g) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "f": g.f,
        "top": [x.value for x in g.top],
        "bottom": [x.value for x in g.bottom],
        "viable": is_viable(g),
        "degenerate": is_degenerate(g),
    }
    if payload["viable"] and not payload["degenerate"]:
        try:
            payload["dominance"] = [d.value for d in dominant_letters(g)]
        except CircularDominance:
            pass
    payload["text"] = gene_text(g)
    return payload


class HandlerRegistry:
    """
    Registry of batch request handlers.

    Singleton pattern ensures a single global registry instance.
    """

    _instance: Optional["HandlerRegistry"] = None

    def __init__(self):
        self._handlers: Dict[str, RequestHandler] = {}

    @classmethod
    def get_instance(cls) -> "HandlerRegistry":
        if cls._instance is None:
            cls._instance = cls()
            for handler in (GeneHandler(), CountHandler(), WeightsHandler(), CommonHandler(), KisinHandler()):
                cls._instance.register(handler)
        return cls._instance

    def register(self, handler: RequestHandler) -> None:
        if handler.name in self._handlers:
            raise ValueError(f"Handler '{handler.name}' is already registered")
        self._handlers[handler.name] = handler
        logger.debug("Registered handler: %s", handler.name)

    def get(self, name: str) -> Optional[RequestHandler]:
        return self._handlers.get(name)

    def list_names(self) -> List[str]:
        return list(self._handlers.keys())

    async def execute(self, record: BatchRecord) -> HandlerResult:
        handler = self.get(record.request)
        if handler is None:
            return HandlerResult(
                success=False,
                error=f"no handler for request {record.request!r}",
                metadata={"available": self.list_names()},
            )
        return await handler.execute(record)

    def __len__(self) -> int:
        return len(self._handlers)

    def __contains__(self, name: str) -> bool:
        return name in self._handlers


def get_handler_registry() -> HandlerRegistry:
    return HandlerRegistry.get_instance()
