'''Exceptions raised by posetkit.

Every error knows the exit code the command line maps it to:
2 for bad input, 1 for a failed validation, 3 for an exhausted budget.
'''


class PosetError(Exception):
    exit_code = 2

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        body = {'error': type(self).__name__, 'message': self.message}
        body.update(self.details)
        return body


# Input errors
class CycleError(PosetError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"Relation contains a cycle. [{' < '.join(self.cycle + self.cycle[:1])}]",
                         cycle=list(self.cycle))


class DuplicateLabelError(PosetError):
    def __init__(self, label):
        self.label = label
        super().__init__(f'Duplicate element label. [{label}]', label=label)


class UnknownElement(PosetError):
    def __init__(self, label):
        self.label = label
        super().__init__(f'Unknown element. [{label}]', label=str(label))


class LabelCollision(PosetError):
    def __init__(self, labels):
        self.labels = tuple(sorted(labels))
        super().__init__(f"Parts share labels. [{', '.join(self.labels)}]", labels=list(self.labels))


class UnknownFamily(PosetError):
    def __init__(self, name):
        self.name = name
        super().__init__(f'Unknown poset family. [{name}]', family=str(name))


class OracleInconsistency(PosetError):
    def __init__(self, kind, elements):
        self.kind = kind
        self.elements = tuple(elements)
        super().__init__(f"Oracle is not a strict order ({kind}). [{', '.join(self.elements)}]",
                         kind=kind, elements=list(self.elements))


class CertificateViolation(PosetError):
    def __init__(self, reason, elements=()):
        self.reason = reason
        self.elements = tuple(elements)
        super().__init__(f"Invalid omega+1 certificate: {reason}. [{', '.join(self.elements)}]",
                         reason=reason, elements=list(self.elements))


class DocumentError(PosetError):
    pass


class BadParams(PosetError):
    pass


class EmptyPoset(PosetError):
    def __init__(self, operation):
        self.operation = operation
        super().__init__(f'Operation needs a nonempty poset. [{operation}]', operation=operation)


# Validation errors
class NotMaximumMatching(PosetError):
    exit_code = 1

    def __init__(self, path):
        self.path = tuple(path)
        super().__init__(f"Matching has an augmenting path. [{' - '.join(map(str, self.path))}]",
                         path=[str(_) for _ in self.path])


class InvalidMatching(PosetError):
    exit_code = 1

    def __init__(self, edge, reason):
        self.edge = edge
        super().__init__(f'Not a matching of the graph: {reason}. [{edge}]', edge=str(edge), reason=reason)


class InvalidPartWitness(PosetError):
    exit_code = 1

    def __init__(self, index, report):
        self.index = index
        self.report = report
        super().__init__(f'Witness of part {index} is invalid. [{report}]',
                         index=index, violations=report.to_list())


# Budget errors
class BudgetExceeded(PosetError):
    exit_code = 3

    def __init__(self, limit, value):
        self.limit = limit
        self.value = value
        super().__init__(f'Search budget exceeded. [{limit}: {value}]', limit=limit, value=value)
