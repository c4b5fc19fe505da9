"""
Central module for document schemas and shipped data
"""

import json
from pathlib import Path

data_dir = Path(__file__).parent.resolve()


def _load_json(name: str) -> dict:
    with open(data_dir.joinpath(name), "rb") as f:
        return json.load(f)


character_table_schema = _load_json("character_table_schema.json")
unit_candidate_schema = _load_json("unit_candidate_schema.json")
brauer_tree_schema = _load_json("brauer_tree_schema.json")
instance_schema = _load_json("instance_schema.json")
run_config_schema = _load_json("run_config_schema.json")


def get_default_value(key: str):
    """
    Get default value for a run configuration parameter.

    :param key: Key to check
    :return: default value
    """
    return run_config_schema["properties"][key]["default"]


psl2_16_dir = data_dir.joinpath("psl2_16")
psl2_16_aliases_path = psl2_16_dir.joinpath("aliases.json")
psl2_16_candidate_path = psl2_16_dir.joinpath("candidate_order15.json")
psl2_16_tree_paths = {
    (3, "principal"): psl2_16_dir.joinpath("tree_p3_principal.json"),
    (3, "nonprincipal"): psl2_16_dir.joinpath("tree_p3_nonprincipal.json"),
    (5, "principal"): psl2_16_dir.joinpath("tree_p5_principal.json"),
    (5, "nonprincipal"): psl2_16_dir.joinpath("tree_p5_nonprincipal.json"),
}
psl2_16_bundle_paths = {
    3: psl2_16_dir.joinpath("bundle_p3.json"),
    5: psl2_16_dir.joinpath("bundle_p5.json"),
}
psl2_16_witness_paths = {
    3: psl2_16_dir.joinpath("witness_p3.json"),
    5: psl2_16_dir.joinpath("witness_p5.json"),
}

with open(psl2_16_aliases_path, "rb") as f:
    psl2_16_aliases = json.load(f)
