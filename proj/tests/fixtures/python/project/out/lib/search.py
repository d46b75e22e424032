if ENABLE_AUDIT_LOG:
    audit()
