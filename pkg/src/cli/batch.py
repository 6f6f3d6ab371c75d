"""
JSONL batch processing.

Records run concurrently under a semaphore; results come back in input
order, one object per non-blank line.
"""

import asyncio
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from src.config import get_config

from .handlers import BatchRecord, HandlerRegistry, get_handler_registry


logger = logging.getLogger(__name__)


def _first_error(e: ValidationError) -> str:
    err = e.errors()[0]
    where = ".".join(str(x) for x in err.get("loc", ()))
    return f"{where}: {err.get('msg')}" if where else str(err.get("msg"))


async def process_line(
    line: str,
    line_no: int,
    semaphore: asyncio.Semaphore,
    registry: HandlerRegistry,
) -> Dict[str, Any]:
    try:
        record = BatchRecord.model_validate(json.loads(line))
    except json.JSONDecodeError as e:
        return {"error": f"invalid JSON: {e.msg}", "line": line_no}
    except ValidationError as e:
        return {"error": _first_error(e), "line": line_no}

    async with semaphore:
        result = await registry.execute(record)
    if not result.success:
        return {"error": result.error, "line": line_no}
    return result.data or {}


async def run_batch(lines: Sequence[str], concurrency: Optional[int] = None) -> List[Dict[str, Any]]:
    """Process every non-blank line; output order equals input order."""
    if concurrency is None:
        concurrency = get_config().enumeration.batch_concurrency
    semaphore = asyncio.Semaphore(concurrency)
    registry = get_handler_registry()
    tasks = [
        process_line(line, n, semaphore, registry)
        for n, line in enumerate(lines, start=1)
        if line.strip()
    ]
    logger.info("Processing %d batch records with concurrency %d", len(tasks), concurrency)
    return list(await asyncio.gather(*tasks))


def dump_results(results: Sequence[Dict[str, Any]]) -> str:
    return "\n".join(json.dumps(r, ensure_ascii=False) for r in results)
