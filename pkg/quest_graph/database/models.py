"""
Database Models
SQLAlchemy models for benchmark results
"""

from sqlalchemy import Column, Integer, String, DateTime, Float, Boolean
from sqlalchemy.orm import declarative_base
from datetime import datetime

Base = declarative_base()


class BenchRun(Base):
    """One simulator run of a benchmark sweep"""
    __tablename__ = 'bench_runs'

    id = Column(Integer, primary_key=True)
    variant = Column(String(16), nullable=False, index=True)
    n = Column(Integer, nullable=False)
    c = Column(Integer, nullable=False)
    raw_ops = Column(Integer, nullable=False)
    weighted_cost = Column(Float)
    wall_ms = Column(Float)
    halted = Column(Boolean, default=True)
    created_at = Column(DateTime, default=datetime.utcnow)
    updated_at = Column(DateTime, default=datetime.utcnow, onupdate=datetime.utcnow)

    def __repr__(self):
        return f"<BenchRun(variant={self.variant}, N={self.n}, C={self.c}, raw_ops={self.raw_ops})>"
