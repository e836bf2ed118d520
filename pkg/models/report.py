#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Run configuration and the JSON report envelope written by every command
"""

from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

import config


class RunConfig(BaseModel):
    """
    Settings of one command-line run
    """

    model_config = ConfigDict(extra='forbid')

    R: float = Field(default_factory=lambda: config.DEFAULT_R)
    N: int = Field(default_factory=lambda: config.DEFAULT_N)
    precision_bits: int = Field(default_factory=lambda: config.DEFAULT_PRECISION_BITS)
    seed: int = Field(default_factory=lambda: config.DEFAULT_SEED)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    output_path: Optional[str] = None
    reproducible: bool = False

    @field_validator('R')
    @classmethod
    def check_radius(cls, value):
        if not value > 1:
            raise ValueError(f"R must exceed 1, got {value}")
        return value

    @field_validator('N')
    @classmethod
    def check_degree(cls, value):
        if value < 8:
            raise ValueError(f"N must be at least 8, got {value}")
        return value

    @field_validator('precision_bits')
    @classmethod
    def check_bits(cls, value):
        if value < 64:
            raise ValueError(f"precision must be at least 64 bits, got {value}")
        return value

    @field_validator('seed')
    @classmethod
    def check_seed(cls, value):
        if not 0 <= value < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {value}")
        return value

    @field_validator('tolerances')
    @classmethod
    def check_tolerances(cls, value):
        unknown = sorted(set(value) - set(config.TOLERANCES))
        if unknown:
            raise ValueError(f"unknown tolerance names: {', '.join(unknown)}")
        for name, tol in value.items():
            if not tol > 0:
                raise ValueError(f"tolerance {name} must be positive, got {tol}")
        return value


class RunReport(BaseModel):
    """Envelope shared by all commands; schemas/report.schema.json is its JSON schema"""

    model_config = ConfigDict(extra='forbid')

    command: str
    config: RunConfig
    inputs_digest: str
    result: Dict[str, Any]
    diagnostics: Dict[str, Any]
    elapsed_ms: float = Field(ge=0)
