package cadence

func (x *handler) run() {
	if x.ready {
		if e.config.EnableTasklistIsolation {
			x.apply()
		}
		if e.config.EnableSyncMatch {
			x.apply()
		}
	}
}
