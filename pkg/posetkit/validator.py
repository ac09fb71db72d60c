import warnings
import cerberus_kind
from cerberus_kind.utils import parse_error

from .errors import DocumentError
warnings.simplefilter("ignore", UserWarning)


class Validator(cerberus_kind.Validator):
    def _validate_description(self, constraint, field, value):
        ''' Documents a schema key; never fails.

        The rule's arguments are validated against this schema:
        {'type': 'string'}
        '''

    # Named coercers: cerberus_kind JSON-copies nested schemas, so callables cannot appear there.
    def _normalize_coerce_int(self, value):
        return int(value)

    def _normalize_coerce_str(self, value):
        return str(value)

    def _normalize_coerce_float(self, value):
        return float(value)


def normalize(schema, document, what='document'):
    ''' Validated and normalized copy of document, or DocumentError listing every problem '''
    validator = Validator(schema)
    if not isinstance(document, dict) or not validator.validate(document):
        errors = parse_error(validator.errors, with_path=True) if isinstance(document, dict) else 'not a mapping'
        raise DocumentError(f'Invalid {what}. [{errors}]', errors=str(errors))
    return validator.document


POSET_DOCUMENT_SCHEMA = {
    'elements': {
        'description': 'Element labels, each listed once.',
        'type': 'list',
        'required': True,
        'schema': {'type': 'string', 'coerce': 'str'},
    },
    'relations': {
        'description': 'Strict "from < to" pairs; closed transitively on load.',
        'type': 'list',
        'default': [],
        'schema': {
            'type': 'list',
            'items': [{'type': 'string', 'coerce': 'str'}, {'type': 'string', 'coerce': 'str'}],
        },
    },
}

CONFIG_SCHEMA = {
    'budget': {
        'description': 'Limits for exponential searches.',
        'type': 'dict',
        'default': {},
        'schema': {
            'max_elements': {'type': 'integer', 'coerce': 'int', 'min': 0, 'default': 6},
            'max_k': {'type': 'integer', 'coerce': 'int', 'min': 1, 'default': 3},
            'time_ms': {'type': 'integer', 'coerce': 'int', 'min': 1, 'nullable': True, 'default': 60000},
        },
    },
    'enumeration': {
        'description': 'Exhaustive poset enumeration.',
        'type': 'dict',
        'default': {},
        'schema': {
            'max_n': {'type': 'integer', 'coerce': 'int', 'min': 0, 'max': 7, 'default': 6},
            'allow_seven': {'type': 'boolean', 'default': False},
        },
    },
    'lazy': {
        'description': 'Prefix truncation of lazy posets.',
        'type': 'dict',
        'default': {},
        'schema': {
            'check_oracle': {'type': 'boolean', 'default': True},
        },
    },
    'verify': {
        'description': 'Exhaustive verification runner.',
        'type': 'dict',
        'default': {},
        'schema': {
            'jobs': {'type': 'integer', 'coerce': 'int', 'min': 1, 'default': 1},
        },
    },
}

GENERATE_SCHEMAS = {
    'random-order': {
        'n': {'type': 'integer', 'min': 0, 'required': True},
        'dims': {'type': 'integer', 'min': 1, 'default': 2},
    },
    'unit-semiorder': {
        'n': {'type': 'integer', 'min': 0, 'required': True},
        'spread': {'type': 'float', 'coerce': 'float', 'min': 0.0, 'nullable': True, 'default': None},
    },
    'grid': {
        'rows': {'type': 'integer', 'min': 1, 'required': True},
        'cols': {'type': 'integer', 'min': 1, 'required': True},
    },
    'bipartite': {
        'n': {'type': 'integer', 'min': 0, 'required': True},
        'p': {'type': 'float', 'coerce': 'float', 'min': 0.0, 'max': 1.0, 'default': 0.5},
    },
}
