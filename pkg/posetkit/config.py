'''Optional configuration file.

`.posetkit.yaml` in the working directory is read when present; any other
file can be named with --config. JSON is accepted too. `POSETKIT_BUDGET_MS`
caps exponential searches regardless of the file.
'''
import json
import os
from dataclasses import dataclass
from typing import Optional

from . import yaml_parser
from .debug import log
from .errors import DocumentError
from .validator import CONFIG_SCHEMA, normalize

DEFAULT_CONFIG = '.posetkit.yaml'
BUDGET_ENV = 'POSETKIT_BUDGET_MS'


@dataclass(frozen=True)
class Config:
    max_elements: int = 6
    max_k: int = 3
    time_ms: Optional[int] = 60000
    max_n: int = 6
    allow_seven: bool = False
    check_oracle: bool = True
    jobs: int = 1


def _read(path):
    ext = os.path.splitext(path)[1].lower()
    try:
        if ext in ['.yaml', '.yml']:
            return yaml_parser.load(path)
        elif ext == '.json':
            with open(path, encoding='utf-8') as f:
                return json.load(f)
    except (OSError, ValueError) as e:
        raise DocumentError(f'Failed to load config file. [{path}: {e}]')
    except Exception as e:
        raise DocumentError(f'Failed to parse config file. [{path}: {e}]')
    raise DocumentError(f'Not supported config file type. [{path}]')


def load_config(path=None):
    if path is None:
        raw = _read(DEFAULT_CONFIG) if os.path.exists(DEFAULT_CONFIG) else {}
    elif not os.path.exists(path):
        raise DocumentError(f'Cannot find config file. [{path}]')
    else:
        raw = _read(path)
    doc = normalize(CONFIG_SCHEMA, raw or {}, 'config')
    budget, enumeration = doc['budget'], doc['enumeration']
    time_ms = budget['time_ms']
    if os.getenv(BUDGET_ENV):
        try:
            time_ms = int(os.environ[BUDGET_ENV])
        except ValueError:
            raise DocumentError(f'{BUDGET_ENV} must be an integer. [{os.environ[BUDGET_ENV]}]')
    config = Config(
        max_elements=budget['max_elements'],
        max_k=budget['max_k'],
        time_ms=time_ms,
        max_n=enumeration['max_n'],
        allow_seven=enumeration['allow_seven'],
        check_oracle=doc['lazy']['check_oracle'],
        jobs=doc['verify']['jobs'],
    )
    log(f'config: {config}')
    return config
