"""End-to-end tests for the command line and workflows."""
