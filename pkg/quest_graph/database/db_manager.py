"""
Results Manager
Stores benchmark reports in a local SQLite database
"""

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker, Session
from typing import Iterable, List, Optional
import logging

from .models import Base, BenchRun
from ..cgsim.report import SimReport
from ..utils.config import Config

logger = logging.getLogger(__name__)


class ResultsManager:
    """Manages the benchmark results database"""

    def __init__(self, db_path: str = None):
        """
        Initialize results manager

        Args:
            db_path: Path to SQLite database file. If None, uses Config.DATABASE_PATH.
        """
        if db_path is None:
            db_path = str(Config.DATABASE_PATH)

        self.db_path = db_path
        self.engine = create_engine(f'sqlite:///{db_path}', echo=Config.DB_ECHO)
        self.Session = sessionmaker(bind=self.engine, expire_on_commit=False)

        # Create tables if they don't exist
        Base.metadata.create_all(self.engine)

        logger.info(f"Results database initialized at: {db_path}")

    def get_session(self) -> Session:
        """Get a new database session"""
        return self.Session()

    def add_report(self, report: SimReport) -> bool:
        """
        Store one simulator report

        Returns:
            True if successful
        """
        return self.add_reports([report]) == 1

    def add_reports(self, reports: Iterable[SimReport]) -> int:
        """
        Store several reports in one transaction

        Returns:
            Number of reports stored
        """
        session = self.get_session()
        try:
            runs = [BenchRun(variant=r.variant, n=r.n, c=r.c, raw_ops=r.raw_ops,
                             weighted_cost=r.weighted_cost, wall_ms=r.wall_ms, halted=r.halted)
                    for r in reports]
            session.add_all(runs)
            session.commit()
            logger.info(f"Stored {len(runs)} benchmark runs")
            return len(runs)
        except Exception as e:
            session.rollback()
            logger.error(f"Error storing benchmark runs: {str(e)}", exc_info=True)
            return 0
        finally:
            session.close()

    def get_runs(self, variant: Optional[str] = None) -> List[BenchRun]:
        """Get stored runs ordered by variant and N, optionally for one variant"""
        session = self.get_session()
        try:
            query = session.query(BenchRun)
            if variant is not None:
                query = query.filter_by(variant=variant)
            return query.order_by(BenchRun.variant, BenchRun.n, BenchRun.id).all()
        finally:
            session.close()

    def get_variants(self) -> List[str]:
        session = self.get_session()
        try:
            return [row[0] for row in session.query(BenchRun.variant).distinct().order_by(BenchRun.variant)]
        finally:
            session.close()

    def delete_variant(self, variant: str) -> int:
        """
        Delete every run of a variant

        Returns:
            Number of runs deleted
        """
        session = self.get_session()
        try:
            deleted = session.query(BenchRun).filter_by(variant=variant).delete()
            session.commit()
            logger.info(f"Deleted {deleted} runs of variant {variant}")
            return deleted
        except Exception as e:
            session.rollback()
            logger.error(f"Error deleting runs: {str(e)}", exc_info=True)
            return 0
        finally:
            session.close()

    def get_database_stats(self) -> dict:
        """Get database statistics"""
        session = self.get_session()
        try:
            stats = {'runs': session.query(BenchRun).count()}
            for variant, in session.query(BenchRun.variant).distinct():
                stats[variant] = session.query(BenchRun).filter_by(variant=variant).count()
            return stats
        finally:
            session.close()

    def close(self):
        """Close database connection"""
        self.engine.dispose()
