class ComputationRefused(RuntimeError):
    """A computation was refused because it exceeds a configured size cap."""


class MatrixTooLarge(ComputationRefused):
    pass


class OracleCapExceeded(ComputationRefused):
    pass
