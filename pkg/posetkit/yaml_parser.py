import os
import io
import re
import yaml
try:
    from yaml import CSafeLoader as BaseLoader, CSafeDumper as Dumper
except ImportError:
    from yaml import SafeLoader as BaseLoader, SafeDumper as Dumper


class Loader(BaseLoader):
    def __init__(self, stream):
        super(Loader, self).__init__(stream)

    interpolation_matcher = re.compile(r'\$\{([\w.-]+)(|:-([^}^{]+))\}')
    def interpolation(self, node):
        ''' Extract the matched value, expand env variable, and replace the match '''
        value = node.value
        match = self.interpolation_matcher.match(value)
        env_var = match.group(1)
        default = match.group(3)
        expanded = os.environ.get(env_var, default)
        if expanded is None:
            return None
        return expanded + value[match.end():]

Loader.add_implicit_resolver('!interp', Loader.interpolation_matcher, None)
Loader.add_constructor('!interp', Loader.interpolation)


def read(file):
    ''' Text of a stream, a path or a literal, with `!include name` spliced in '''
    if isinstance(file, io.IOBase):
        stream = file.read()
        base = os.getcwd()
    elif isinstance(file, str) and os.path.isfile(file):
        with open(file, encoding='utf-8') as f:
            stream = f.read()
        base = os.path.dirname(os.path.abspath(file))
    else:
        stream = file
        base = os.getcwd()
    for _ in re.finditer(r'!include\s+([\w.-]+)', stream):
        stream = stream.replace(_.group(0), read(os.path.join(base, _.group(1))))
    return stream


def drop_extensions(data):
    ''' Keys starting with x- are free-form annotations and never reach the schema '''
    if not isinstance(data, dict):
        return data
    return {k: drop_extensions(v) for k, v in data.items() if not str(k).startswith('x-')}


def load(file):
    return drop_extensions(yaml.load(read(file), Loader=Loader))


def dump(doc):
    return yaml.dump(doc, Dumper=Dumper, default_flow_style=None, sort_keys=False, allow_unicode=True)
