"""
Models for character tables
"""

import logging
from functools import cached_property
from typing import Annotated, Optional, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    model_validator,
)

from latticeunits.cyclotomic import CycNumber
from latticeunits.errors import CharacterTableError

logger = logging.getLogger(__name__)


def parse_cyc(value: Union[CycNumber, dict, int, str]) -> CycNumber:
    """
    Parse a serialised cyclotomic number

    :param value: CycNumber, {"order", "coeffs"}, {"zeta": [N, k]} or a rational
    :return: CycNumber
    """
    if isinstance(value, CycNumber):
        return value
    return CycNumber.from_json(value)


def dump_cyc(value: CycNumber) -> Union[dict, str]:
    """
    Serialise a cyclotomic number, writing rationals as plain strings

    :param value: CycNumber
    :return: serialised value
    """
    if value.is_rational():
        return str(value.as_rational())
    return value.to_json()


CycValue = Annotated[
    CycNumber,
    BeforeValidator(parse_cyc),
    PlainSerializer(dump_cyc, return_type=Union[dict, str]),
]


class ClassInfo(BaseModel):
    """
    A conjugacy class, with its element order and prime power maps
    """

    id: str = Field(title="Class name", min_length=1, examples=["1a", "15c"])
    order: int = Field(title="Order of the elements", ge=1)
    powermap: dict[str, str] = Field(
        default_factory=dict,
        title="Class of g^prime, keyed by prime",
        examples=[{"3": "5a", "5": "3a"}],
    )

    model_config = ConfigDict(extra="forbid")


class Character(BaseModel):
    """
    An ordinary irreducible character, with one value per class
    """

    id: str = Field(title="Character name", min_length=1, examples=["chi17"])
    values: list[CycValue] = Field(min_length=1)

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


class CharacterTable(BaseModel):
    """
    Ordinary character table of a finite group
    """

    group: str = Field(title="Name of the group", examples=["PSL(2,16)"])
    order: int = Field(title="Order of the group", ge=1)
    exponent: int = Field(title="Exponent of the group", ge=1)
    classes: list[ClassInfo] = Field(min_length=1)
    characters: list[Character] = Field(min_length=1)

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def validate_classes(self):
        """
        Ensure class ids are unique, the identity comes first, and power maps
        point at existing classes of compatible order

        :return: self
        """
        ids = [c.id for c in self.classes]
        if len(set(ids)) != len(ids):
            raise CharacterTableError(f"Duplicate class ids in {ids}")
        if self.classes[0].order != 1:
            raise CharacterTableError(
                f"The first class must be the identity, got '{self.classes[0].id}'"
            )
        lookup = {c.id: c for c in self.classes}
        for info in self.classes:
            if self.exponent % info.order != 0:
                raise CharacterTableError(
                    f"Class {info.id} has order {info.order}, "
                    f"which does not divide the exponent {self.exponent}"
                )
            for prime, target in info.powermap.items():
                if target not in lookup:
                    raise CharacterTableError(
                        f"Power map of class {info.id} at {prime} points at "
                        f"unknown class '{target}'"
                    )
                if info.order % lookup[target].order != 0:
                    raise CharacterTableError(
                        f"Power map of class {info.id} at {prime} points at class "
                        f"{target} of incompatible order"
                    )
        return self

    @model_validator(mode="after")
    def validate_characters(self):
        """
        Ensure every character has one value per class, lying in the field of
        the class's element order, and a positive integer degree

        :return: self
        """
        ids = [c.id for c in self.characters]
        if len(set(ids)) != len(ids):
            raise CharacterTableError(f"Duplicate character ids in {ids}")
        for char in self.characters:
            if len(char.values) != len(self.classes):
                raise CharacterTableError(
                    f"Character {char.id} has {len(char.values)} values "
                    f"for {len(self.classes)} classes"
                )
            for i, info in enumerate(self.classes):
                value = char.values[i]
                if value.order != info.order:
                    try:
                        char.values[i] = value.descend(info.order)
                    except ValueError as exc:
                        raise CharacterTableError(
                            f"Value of {char.id} on class {info.id} does not lie "
                            f"in the field of {info.order}-th roots of unity"
                        ) from exc
            degree = char.values[0]
            if not degree.is_rational() or degree.as_rational().denominator != 1:
                raise CharacterTableError(f"Degree of {char.id} is not an integer")
            if degree.as_rational() < 1:
                raise CharacterTableError(f"Degree of {char.id} is not positive")
        return self

    @cached_property
    def class_positions(self) -> dict[str, int]:
        """
        Position of each class id

        :return: dictionary
        """
        return {c.id: i for i, c in enumerate(self.classes)}

    @cached_property
    def character_positions(self) -> dict[str, int]:
        """
        Position of each character id

        :return: dictionary
        """
        return {c.id: i for i, c in enumerate(self.characters)}

    def class_ids(self) -> list[str]:
        """
        Class ids in table order

        :return: list of ids
        """
        return [c.id for c in self.classes]

    def character_ids(self) -> list[str]:
        """
        Character ids in table order

        :return: list of ids
        """
        return [c.id for c in self.characters]

    def class_index(self, class_id: str) -> int:
        """
        Position of a class

        :param class_id: class id
        :return: index
        """
        try:
            return self.class_positions[class_id]
        except KeyError as exc:
            err = f"Unknown class '{class_id}' in table of {self.group}"
            logger.error(err)
            raise CharacterTableError(err) from exc

    def class_info(self, class_id: str) -> ClassInfo:
        """
        Class data by id

        :param class_id: class id
        :return: ClassInfo
        """
        return self.classes[self.class_index(class_id)]

    def character(self, char_id: str) -> Character:
        """
        Character by id

        :param char_id: character id
        :return: Character
        """
        try:
            return self.characters[self.character_positions[char_id]]
        except KeyError as exc:
            err = f"Unknown character '{char_id}' in table of {self.group}"
            logger.error(err)
            raise CharacterTableError(err) from exc

    def value(self, char_id: str, class_id: str) -> CycNumber:
        """
        Character value on a class

        :param char_id: character id
        :param class_id: class id
        :return: value
        """
        return self.character(char_id).values[self.class_index(class_id)]

    def degree(self, char_id: str) -> int:
        """
        Degree of a character

        :param char_id: character id
        :return: degree
        """
        return int(self.character(char_id).values[0].as_rational())

    @property
    def identity_class(self) -> str:
        """
        Id of the identity class

        :return: class id
        """
        return self.classes[0].id

    def find_class(self, column: list[CycNumber]) -> Optional[str]:
        """
        Class whose column of character values equals the given one

        :param column: one value per character, in table order
        :return: class id, or None if there is no such class
        """
        for j, info in enumerate(self.classes):
            if all(
                char.values[j] == value
                for char, value in zip(self.characters, column)
            ):
                return info.id
        return None
