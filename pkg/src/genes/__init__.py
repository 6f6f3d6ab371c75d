"""
Genes package.

Validation, parsing and rendering of genes, their fragments and dominant
letters, the gene of a coherent triple, and sampling of triples with a
prescribed gene.
"""

from .letters import Letter, LetterClass, parse_letter
from .gene import (
    Column,
    Gene,
    enumerate_genes,
    gene_text,
    is_degenerate,
    is_viable,
    parse_gene,
    random_gene,
    render_gene,
    use_color,
    validate_gene,
)
from .fragments import (
    Fragment,
    all_fragments,
    cut_columns,
    fragments,
    parse_fragment,
    validate_fragment,
)
from .dominance import (
    DominanceVector,
    column_majority,
    dominant_letters,
    fragment_dominance,
)
from .compute import gene_of_triple, gene_of_triple_oracle
from .sampler import draw_gamma_prime, draw_v, sample_triple, sample_with_retries

__all__ = [
    "Letter",
    "LetterClass",
    "parse_letter",
    "Column",
    "Gene",
    "enumerate_genes",
    "gene_text",
    "is_degenerate",
    "is_viable",
    "parse_gene",
    "random_gene",
    "render_gene",
    "use_color",
    "validate_gene",
    "Fragment",
    "all_fragments",
    "cut_columns",
    "fragments",
    "parse_fragment",
    "validate_fragment",
    "DominanceVector",
    "column_majority",
    "dominant_letters",
    "fragment_dominance",
    "gene_of_triple",
    "gene_of_triple_oracle",
    "draw_gamma_prime",
    "draw_v",
    "sample_triple",
    "sample_with_retries",
]
