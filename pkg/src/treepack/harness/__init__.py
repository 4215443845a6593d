"""Graph generation, theorem checkers, file formats and hunts."""
