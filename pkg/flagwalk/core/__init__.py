"""Core utilities: exceptions, logging and parallel execution."""
