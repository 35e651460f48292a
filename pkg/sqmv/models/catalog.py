"""
Model catalog.
Names resolve to fresh or cached models:

    square | disk | interval | flat-standard | ex32 | ex32-grid
    chain:<n> | flatten:<base>:<k> | product:<m1>,<m2>

A trailing ``@w`` selects the Wajsberg view. Nested names may be wrapped
in parentheses.
"""
import logging
from functools import lru_cache
from typing import List

from sqmv.models.base import Model
from sqmv.models.constructions import FlatteningModel, ProductModel, WajsbergView
from sqmv.models.elements import Fresh, split_top_level
from sqmv.models.finite import chain, tabulate
from sqmv.models.standard import (
    HalfSquareModel, IntervalModel, SquareModel, SquareWajsbergModel, StandardFlatModel,
)
from sqmv.syntax.terms import Connective, Signature
from sqmv.utils.errors import CatalogError, SpecError

# Set up logging
logger = logging.getLogger(__name__)

CATALOG_NAMES = [
    "square", "disk", "interval", "flat-standard", "ex32", "ex32-grid",
    "chain:<n>", "flatten:<base>:<k>", "product:<m1>,<m2>",
]


def _enclosed(name: str) -> bool:
    """True when the first '(' closes at the last character"""
    if not (name.startswith("(") and name.endswith(")")):
        return False
    depth = 0
    for position, char in enumerate(name):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth == 0 and position != len(name) - 1:
                return False
    return True


def _unwrap(name: str) -> str:
    name = name.strip()
    while _enclosed(name):
        name = name[1:-1].strip()
    return name


@lru_cache(maxsize=128)
def resolve_model(name: str) -> Model:
    """
    Resolve a catalog name.

    Args:
        name: Catalog name, optionally suffixed with ``@w``

    Returns:
        Model: The model, tabulated when its carrier is finite

    Raises:
        CatalogError: If the name is not understood
        SpecError: If construction parameters are invalid
    """
    name = _unwrap(name)
    if name.endswith("@w"):
        return wajsberg_view(_resolve_mv(_unwrap(name[:-2])))
    return _resolve_mv(name)


def wajsberg_view(model: Model) -> Model:
    """The Wajsberg view, closed form for the square and the disk"""
    if isinstance(model, SquareModel) and model.signature is Signature.MV:
        return SquareWajsbergModel(model.disk)
    view = WajsbergView(model)
    return tabulate(view) if view.is_finite else view


def _resolve_mv(name: str) -> Model:
    name = _unwrap(name)
    if name.endswith("@w"):
        raise CatalogError(f"'{name}': the Wajsberg suffix is only allowed at the end of a name")
    if name == "square":
        model = SquareModel()
    elif name == "disk":
        model = SquareModel(disk=True)
    elif name == "interval":
        model = IntervalModel()
    elif name == "flat-standard":
        model = StandardFlatModel()
    elif name == "ex32":
        model = HalfSquareModel()
    elif name == "ex32-grid":
        source = HalfSquareModel()
        model = tabulate(source, "ex32-grid", source.grid_elements())
    elif name.startswith("chain:"):
        try:
            model = chain(int(name[len("chain:"):]))
        except ValueError:
            raise CatalogError(f"'{name}': chain length must be an integer")
    elif name.startswith("flatten:"):
        base_name, separator, k_label = name[len("flatten:"):].rpartition(":")
        if not separator or not base_name:
            raise CatalogError(f"'{name}': expected flatten:<base>:<k>")
        base = _resolve_mv(base_name)
        k = Fresh() if k_label.strip() == "k" else base.parse_value(k_label)
        model = FlatteningModel(base, k)
        if model.is_finite:
            model = tabulate(model)
    elif name.startswith("product:"):
        parts = split_top_level(name[len("product:"):])
        if len(parts) != 2:
            raise CatalogError(f"'{name}': expected product:<m1>,<m2>")
        product = ProductModel(_resolve_mv(parts[0]), _resolve_mv(parts[1]))
        model = tabulate(product) if product.is_finite else product
    else:
        raise CatalogError(f"unknown model '{name}'; known: {', '.join(CATALOG_NAMES)}")

    zero = model.constant(Connective.ZERO)
    if model.compute(Connective.MINUS, (zero,)) != zero:
        raise SpecError(f"{model.name} violates 0 = -0")
    logger.info(f"Resolved model {model.name}")
    return model


def list_models() -> List[str]:
    return list(CATALOG_NAMES)
