package cadence

func (x *handler) run() {
	if x.ready {
		if e.config.EnableConsistentQuery {
			x.apply()
		}
		if e.config.EnableDropStuckTaskByDomainID {
			x.apply()
		}
	}
}
