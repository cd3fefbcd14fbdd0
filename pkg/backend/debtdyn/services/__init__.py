# Service module exports
