# CRG data model, constructions and blow-ups
from crg.model import Crg, EdgeColor, ProbMass, VertexColor

__all__ = ["Crg", "EdgeColor", "ProbMass", "VertexColor"]
