from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Base for immutable domain models: no mutation after construction, unknown keys rejected"""

    model_config = ConfigDict(frozen=True, extra="forbid")
