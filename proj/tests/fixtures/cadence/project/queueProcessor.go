package cadence

func (x *handler) run() {
	if x.ready {
		if q.options.EnableValidator {
			x.apply()
		}
	}
}
