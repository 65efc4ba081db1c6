"""Domain types of the AMDiRE toolchain.

Every type is an immutable pydantic model, so catalogs, syntax trees and
model graphs can be shared between concurrent pipeline phases.
"""

from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Pydantic Basemodel for immutable domain values."""

    model_config = ConfigDict(extra="forbid", frozen=True)
