"""Exception hierarchy. Every error carries a module-qualified ``code``."""


class SeqlabError(Exception):
    code = "seqlab/error"


class DomainError(SeqlabError, ValueError):
    code = "arith-core/domain"


class FamilyError(SeqlabError, ValueError):
    code = "seq-gen/invalid-spec"


class GeneratorError(SeqlabError, ArithmeticError):
    code = "seq-gen/generator"


class IndexRangeError(SeqlabError, IndexError):
    code = "realizability/range"


class NotRealizableError(SeqlabError):
    code = "realize-sim/not-realizable"

    def __init__(self, index, reason):
        super().__init__(f"prefix not realizable at n={index}: {reason}")
        self.index = index
        self.reason = reason


class SizeGuardError(SeqlabError):
    code = "realize-sim/size-guard"


class ContractError(SeqlabError, ValueError):
    code = "congruence-lab/contract"


class WitnessContractError(SeqlabError, ValueError):
    code = "witness/contract"


class BFileFormatError(SeqlabError, ValueError):
    code = "corpus-io/format"

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class BFileNotFoundError(SeqlabError, LookupError):
    code = "corpus-io/not-found"


class NetworkDisabledError(SeqlabError):
    code = "corpus-io/network-disabled"
