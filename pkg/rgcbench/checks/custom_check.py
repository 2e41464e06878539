'''Custom check module'''
from __future__ import annotations
from dataclasses import dataclass
from typing import TYPE_CHECKING, ClassVar, Tuple

from ..reports import CheckReport

if TYPE_CHECKING:
    from ..workbench import Workbench

@dataclass
class CustomCheck:
    '''
    Base class for the checks, with helper attributes shared between them
    '''
    bench: Workbench

    name: ClassVar[str] = ''
    aliases: ClassVar[Tuple[str, ...]] = ()

    @property
    def config(self):
        return self.bench.config

    @property
    def cache(self):
        return self.bench.cache

    @property
    def provider(self):
        return self.bench.provider

    @property
    def pool(self):
        return self.bench.pool

    @property
    def seed(self):
        return self.config.seed

    def new_report(self) -> CheckReport:
        return CheckReport(self.name, config=self.config.as_dict(), seed=self.seed)

    def run(self) -> CheckReport:
        raise NotImplementedError
