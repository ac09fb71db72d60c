'''Poset documents (JSON or YAML) and DOT export.'''
import json
import os

from . import yaml_parser
from .core import Poset, canonical, from_relations, hasse, label_key
from .decomposition import GraphKind, graph_view
from .errors import BadParams, DocumentError
from .validator import POSET_DOCUMENT_SCHEMA, normalize

FORMATS = ['json', 'yaml']
VIEWS = ['hasse', 'inc', 'comp']


def parse_document(source) -> Poset:
    '''Poset from a mapping, or from JSON/YAML text.'''
    if isinstance(source, (str, bytes)):
        try:
            source = yaml_parser.load(source if isinstance(source, str) else source.decode('utf-8'))
        except Exception as e:
            raise DocumentError(f'Failed to parse document. [{e}]')
    doc = normalize(POSET_DOCUMENT_SCHEMA, source)
    return from_relations(doc['elements'], [tuple(_) for _ in doc['relations']])


def load_document(path) -> Poset:
    ext = os.path.splitext(path)[1].lower()
    if ext not in ['.json', '.yaml', '.yml']:
        raise DocumentError(f'Not supported document file type. [{path}]')
    try:
        if ext == '.json':
            with open(path, encoding='utf-8') as f:
                source = json.load(f)
        elif os.path.isfile(path):
            source = yaml_parser.load(path)
        else:
            raise FileNotFoundError(2, 'No such file', path)
    except OSError as e:
        raise DocumentError(f'Failed to load file. [{path}: {e.strerror}]')
    except Exception as e:
        raise DocumentError(f'Failed to load file. (ParseError) [{path}: {e}]')
    return parse_document(source)


def emit_document(p: Poset) -> dict:
    '''Elements in poset order, relations as the Hasse covers.'''
    position = {x: i for i, x in enumerate(p.elements)}
    covers = sorted(hasse(p), key=lambda e: (position[e[0]], position[e[1]]))
    return {'elements': list(p.elements), 'relations': [list(_) for _ in covers]}


def dumps_document(doc, fmt='json'):
    if fmt == 'json':
        return json.dumps(doc, indent=2, ensure_ascii=False)
    if fmt == 'yaml':
        return yaml_parser.dump(doc)
    raise BadParams(f'Unknown document format. [{fmt}]')


def _quote(label):
    return '"' + str(label).replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(p: Poset, view='hasse', name='P'):
    if view not in VIEWS:
        raise BadParams(f'Unknown view. [{view}]')
    lines = []
    if view == 'hasse':
        lines.append(f'digraph {_quote(name)} {{')
        lines.append('  rankdir=BT;')
        edges = sorted(hasse(p), key=lambda e: (label_key(e[0]), label_key(e[1])))
        arrow = '->'
    else:
        lines.append(f'graph {_quote(name)} {{')
        edges = graph_view(p, GraphKind(view)).edges
        arrow = '--'
    for x in canonical(p.elements):
        lines.append(f'  {_quote(x)};')
    for x, y in edges:
        lines.append(f'  {_quote(x)} {arrow} {_quote(y)};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
