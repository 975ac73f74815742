class MapperError(Exception):
    pass


class DimensionError(MapperError):
    pass


class FieldDataError(MapperError):
    pass


class FieldFormatError(MapperError):
    pass


class BoundsError(MapperError):
    pass


class CoverParameterError(MapperError):
    pass


class UnsupportedCoverStyleError(MapperError):
    pass


class CoverMismatchError(MapperError):
    def __init__(self, message: str, *, pixel: int):
        super().__init__(message)
        self.pixel = pixel


class GraphParameterError(MapperError):
    pass


class GraphFormatError(MapperError):
    pass
