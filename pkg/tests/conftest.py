"""Shared fixtures: the worked 36-set example and the bundled config files."""

from pathlib import Path

import pytest

from zcacs import ConstructionParams, GeneratorConfig, RadixBlock, RadixSpec, build_codeset

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


def example1_params() -> ConstructionParams:
    spec = RadixSpec(
        (RadixBlock(2, 2),),
        (RadixBlock(3, 2),),
        row_primed=(3,),
        col_primed=(2,),
    )
    return ConstructionParams(spec, (1,), (1,))


def make_example1_config() -> GeneratorConfig:
    # 36 sets of 6 arrays, 12x18, zone 4x9, entries mod 6
    return GeneratorConfig.defaults(
        example1_params(),
        row_perms=[(2, 1)],
        col_perms=[(1, 2)],
        row_linear=[(1, 2)],
        col_linear=[(2, 1)],
    )


@pytest.fixture(scope="session")
def example1_config() -> GeneratorConfig:
    return make_example1_config()


@pytest.fixture(scope="session")
def example1_codeset(example1_config):
    return build_codeset(example1_config)


@pytest.fixture(scope="session")
def config_dir() -> Path:
    return CONFIG_DIR
