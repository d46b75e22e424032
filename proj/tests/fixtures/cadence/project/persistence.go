package cadence

func (x *handler) run() {
	if x.ready {
		if p.cfg.EnableSQLAsyncTransaction {
			x.apply()
		}
		if p.cfg.EnableShardIDMetrics {
			x.apply()
		}
	}
}
