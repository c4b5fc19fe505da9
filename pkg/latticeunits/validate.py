"""
Module for validating and loading input documents
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from jsonschema import ValidationError as SchemaValidationError
from jsonschema import validate
from pydantic import ValidationError

from latticeunits.data import (
    brauer_tree_schema,
    character_table_schema,
    instance_schema,
    run_config_schema,
    unit_candidate_schema,
)
from latticeunits.errors import DocumentValidationError
from latticeunits.models import (
    BrauerTree,
    CharacterTable,
    InstanceBundle,
    RunConfig,
    UnitCandidate,
)
from latticeunits.models.config import GENERATED_PREFIX
from latticeunits.psl2 import brauer_trees, character_table

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _validate(data: dict, schema: dict, kind: str):
    try:
        validate(data, schema=schema)
        logger.debug(f"Successfully validated {kind} schema")
    except SchemaValidationError as exc:
        logger.error(
            f"Error with JSON schema validation, {kind} not formatted correctly."
        )
        logger.error(exc.message)
        raise DocumentValidationError(f"Invalid {kind}: {exc.message}") from exc


def validate_character_table_json(data: dict):
    """
    Validates that a character table document matches the schema.
    Returns nothing, but raises an error if needed.

    :param data: data to validate
    :return: None
    """
    _validate(data, character_table_schema, "character table")


def validate_unit_candidate_json(data: dict):
    """
    Validates that a unit candidate document matches the schema.

    :param data: data to validate
    :return: None
    """
    _validate(data, unit_candidate_schema, "unit candidate")


def validate_brauer_tree_json(data: dict):
    """
    Validates that a Brauer tree document matches the schema.

    :param data: data to validate
    :return: None
    """
    _validate(data, brauer_tree_schema, "Brauer tree")


def validate_instance_json(data: dict):
    """
    Validates that an instance bundle matches the schema.

    :param data: data to validate
    :return: None
    """
    _validate(data, instance_schema, "instance bundle")


def validate_run_config_json(data: dict):
    """
    Validates that a run configuration matches the schema.

    :param data: data to validate
    :return: None
    """
    _validate(data, run_config_schema, "run configuration")


def read_json(path: PathLike) -> dict:
    """
    Read a JSON document

    :param path: path of the document
    :return: parsed document
    """
    path = Path(path)
    if not path.exists():
        err = f"File {path} does not exist"
        logger.error(err)
        raise DocumentValidationError(err)
    try:
        with open(path, "rb") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        err = f"File {path} is not valid JSON: {exc}"
        logger.error(err)
        raise DocumentValidationError(err) from exc


def _build(model, data: dict, kind: str):
    try:
        return model(**data)
    except ValidationError as exc:
        err = f"Invalid {kind}: {exc}"
        logger.error(err)
        raise DocumentValidationError(err) from exc


def _generated_parts(reference: str) -> list[int]:
    try:
        return [int(x) for x in reference[len(GENERATED_PREFIX):].split(":")]
    except ValueError as exc:
        err = f"Cannot parse generated reference '{reference}'"
        logger.error(err)
        raise DocumentValidationError(err) from exc


def _resolve(reference: PathLike, base: Optional[Path]) -> Path:
    path = Path(reference)
    if base is not None and not path.is_absolute():
        path = base.joinpath(path)
    return path


def load_character_table(
    reference: PathLike, base: Optional[Path] = None
) -> CharacterTable:
    """
    Load a character table from a file, or generate it for references psl2:<q>

    :param reference: path or generated reference
    :param base: directory relative paths are resolved against
    :return: CharacterTable
    """
    if str(reference).startswith(GENERATED_PREFIX):
        parts = _generated_parts(str(reference))
        if len(parts) != 1:
            raise DocumentValidationError(f"Expected psl2:<q>, got '{reference}'")
        return character_table(parts[0])
    data = read_json(_resolve(reference, base))
    validate_character_table_json(data)
    table = _build(CharacterTable, data, "character table")
    logger.info(f"Loaded character table of {table.group}")
    return table


def load_unit_candidate(
    reference: Union[PathLike, dict, UnitCandidate], base: Optional[Path] = None
) -> UnitCandidate:
    """
    Load a unit candidate from a file or an inline document

    :param reference: path, document or candidate
    :param base: directory relative paths are resolved against
    :return: UnitCandidate
    """
    if isinstance(reference, UnitCandidate):
        return reference
    data = reference if isinstance(reference, dict) else read_json(
        _resolve(reference, base)
    )
    validate_unit_candidate_json(data)
    return _build(UnitCandidate, data, "unit candidate")


def load_brauer_tree(reference: PathLike, base: Optional[Path] = None) -> BrauerTree:
    """
    Load a Brauer tree from a file

    :param reference: path
    :param base: directory relative paths are resolved against
    :return: BrauerTree
    """
    data = read_json(_resolve(reference, base))
    validate_brauer_tree_json(data)
    return _build(BrauerTree, data, "Brauer tree")


def load_brauer_trees(
    reference: PathLike, base: Optional[Path] = None
) -> list[BrauerTree]:
    """
    Load a Brauer tree from a file, or generate all trees of the blocks of
    PSL(2, q) at t with positive defect for references psl2:<q>:<t>

    :param reference: path or generated reference
    :param base: directory relative paths are resolved against
    :return: list of BrauerTree
    """
    if str(reference).startswith(GENERATED_PREFIX):
        parts = _generated_parts(str(reference))
        if len(parts) != 2:
            raise DocumentValidationError(f"Expected psl2:<q>:<t>, got '{reference}'")
        return brauer_trees(*parts)
    return [load_brauer_tree(reference, base)]


def load_run_config(path: PathLike) -> dict:
    """
    Load a run configuration file, to be merged with command-line flags

    :param path: path of the configuration
    :return: validated configuration
    """
    data = read_json(path)
    validate_run_config_json(data)
    return data


def build_run_config(data: dict) -> RunConfig:
    """
    Build a RunConfig from merged settings

    :param data: settings
    :return: RunConfig
    """
    return _build(RunConfig, data, "run configuration")


@dataclass
class LoadedInstance:
    """
    An instance bundle with its references resolved
    """

    bundle: InstanceBundle
    table: CharacterTable
    trees: list[BrauerTree]
    candidate: UnitCandidate


def load_instance_bundle(path: PathLike) -> LoadedInstance:
    """
    Load an instance bundle and everything it references. Paths are resolved
    relative to the bundle.

    :param path: path of the bundle
    :return: LoadedInstance
    """
    path = Path(path)
    data = read_json(path)
    validate_instance_json(data)
    bundle = _build(InstanceBundle, data, "instance bundle")
    base = path.parent

    table = load_character_table(bundle.table, base)
    trees = []
    for reference in bundle.trees:
        trees += load_brauer_trees(reference, base)
    for tree in trees:
        if tree.p != bundle.p:
            err = (
                f"Tree of block {tree.block} is for p={tree.p}, "
                f"bundle is for p={bundle.p}"
            )
            logger.error(err)
            raise DocumentValidationError(err)
    candidate = load_unit_candidate(bundle.candidate, base)

    logger.info(f"Loaded instance '{bundle.name}' with {len(trees)} blocks")
    return LoadedInstance(bundle=bundle, table=table, trees=trees, candidate=candidate)
